#include <zfam/gkcert.hpp>

#include <gtest/gtest.h>

using namespace zfam;
using namespace zfam::cert;

namespace {

WitnessCertificate shipped(const std::string& name) { return load_certificate(std::string(ZFAM_DATA_DIR) + "/certs/" + name + ".cert.json"); }

VerifyOptions fast() {
  VerifyOptions o;
  o.growth_advisory = false;
  return o;
}

Status status_of(const VerificationReport& r, const std::string& check) {
  auto* c = r.find(check);
  EXPECT_NE(c, nullptr) << check;
  return c ? c->status : Status::Fail;
}

// m = 1 certificate over the first Weyl algebra; witnesses supplied by the caller.
WitnessCertificate weyl_cert(std::string w1, std::string w2) {
  WitnessCertificate c;
  c.family = "weylFull(1)";
  c.m = 1;
  c.l = 0;
  c.witnesses = {std::move(w1), std::move(w2)};
  c.generators = {"x1", "y1"};
  c.recovery = {{"1", "w1"}, {"1", "w2"}};
  c.expected_tdeg = 2;
  return c;
}

}  // namespace

TEST(Certificate, ShippedSl2Passes) {
  auto r = verify_certificate(shipped("sl2"));
  EXPECT_EQ(r.overall(), Status::Pass) << r.to_text();
  EXPECT_EQ(status_of(r, "dagger"), Status::Pass);
  EXPECT_EQ(status_of(r, "center"), Status::Pass);
  EXPECT_EQ(status_of(r, "ddagger"), Status::Pass);
  EXPECT_EQ(status_of(r, "growth"), Status::Pass);
  EXPECT_EQ(r.find("dagger")->details, std::vector<std::string>{"[w2, w1] = 1"});
}

TEST(Certificate, ShippedInvariantPasses) {
  auto r = verify_certificate(shipped("a1_z2"));
  EXPECT_EQ(r.overall(), Status::Pass) << r.to_text();
  EXPECT_EQ(r.find("center")->details, std::vector<std::string>{"no center generators (vacuous)"});
}

TEST(Certificate, RecoveryIdentitiesHoldInTheAlgebra) {
  // the f-recovery cleared of fractions: 2 e f = c + h - h^2/2 in U(sl2)
  nc::FamilyInstance U{nc::make_family("enveloping(A1)"), Domain::rationals()};
  auto E = [&](const std::string& s) { return nc::parse_element(s, U); };
  EXPECT_EQ(E("2*e.1") * E("f.1"), nc::casimir(U) + E("h.1") - E("1/2*h.1^2"));
  // e * (2e)^{-1} h = h/2, so h = 2 w1 w2
  EXPECT_TRUE(ore::frac_eq(ore::frac_mul(ore::Fraction::embed(E("e.1")), ore::parse_fraction("inv(2*e.1) * (h.1)", U)),
                           ore::Fraction::embed(E("1/2*h.1"))));
}

TEST(Certificate, EqualWitnessesFailDagger) {
  auto r = verify_certificate(weyl_cert("x1", "x1"), fast());
  EXPECT_EQ(r.overall(), Status::Fail);
  EXPECT_EQ(status_of(r, "dagger"), Status::Fail);
  EXPECT_EQ(status_of(r, "ddagger"), Status::Skipped);
  EXPECT_EQ(r.find("dagger")->witness, "[w2, w1] = inv(1) * (0), expected 1");

  EXPECT_EQ(verify_certificate(weyl_cert("x1", "y1"), fast()).overall(), Status::Pass);
}

TEST(Certificate, FlippedSignsFailAndNameTheIdentity) {
  auto c = shipped("sl2");
  c.recovery[2].p = "z1 - 2*w1*w2 - 2*w1*w2*w1*w2";
  auto r = verify_certificate(c, fast());
  EXPECT_EQ(r.overall(), Status::Fail);
  EXPECT_EQ(status_of(r, "dagger"), Status::Pass);
  EXPECT_EQ(r.first_violation(), "ddagger: x3 = f.1: (2*w1) * x3 != -2*w1^2*w2^2 - 4*w1*w2 + z1");

  auto d = shipped("sl2");
  d.witnesses[1] = "inv(2*e.1) * (-h.1)";
  auto rd = verify_certificate(d, fast());
  EXPECT_EQ(rd.overall(), Status::Fail);
  EXPECT_EQ(rd.first_violation(), "dagger: [w2, w1] = inv(1) * (-1), expected 1");
}

TEST(Certificate, NonCentralPhiFailsWithWitness) {
  auto c = shipped("sl2");
  c.centers = {"h.1"};
  auto r = verify_certificate(c, fast());
  EXPECT_EQ(status_of(r, "center"), Status::Fail);
  EXPECT_EQ(r.find("center")->witness, "[h.1, e.1] = 2*e.1");
  EXPECT_EQ(r.overall(), Status::Fail);
}

TEST(Certificate, LowCeilingIsInconclusiveNotFail) {
  auto c = shipped("a1_z2");
  c.bounds.initial = 1;
  VerifyOptions o = fast();
  o.bound_ceiling = 1;
  auto r = verify_certificate(c, o);
  EXPECT_EQ(status_of(r, "dagger"), Status::Inconclusive);
  EXPECT_EQ(r.overall(), Status::Inconclusive);
  // the default ceiling decides it
  o.bound_ceiling = 16;
  EXPECT_EQ(verify_certificate(c, o).overall(), Status::Pass);
}

TEST(Certificate, LoadTimeErrors) {
  auto sl2 = shipped("sl2");
  auto bad = sl2;
  bad.expected_tdeg = 4;
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.sign_convention = "other";
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.witnesses.pop_back();
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.generators = {"e.1", "2*e.1", "f.1"};
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.generators = {"e.1", "h.1"};
  bad.recovery.pop_back();
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.recovery[0].q = "w1 - w1";
  EXPECT_THROW(load(bad), CertificateError);
  bad = sl2;
  bad.recovery[0].p = "w3";
  EXPECT_THROW(load(bad), CertificateError);

  auto inv = shipped("a1_z2");
  inv.witnesses[0] = "x1";
  EXPECT_THROW(load(inv), CertificateError);
  inv = shipped("a1_z2");
  inv.generators[0] = "y1";
  EXPECT_THROW(load(inv), CertificateError);
}

TEST(Certificate, JsonRoundTripAndMissingFields) {
  auto c = shipped("sl2");
  auto j = to_json(c);
  auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());

  auto broken = nlohmann::json::parse(j.dump());
  broken.erase("expected_tdeg");
  try {
    certificate_from_json(broken);
    FAIL() << "missing field accepted";
  } catch (const CertificateError& e) {
    EXPECT_NE(std::string(e.what()).find("expected_tdeg"), std::string::npos);
  }
  broken = nlohmann::json::parse(j.dump());
  broken["schema_version"] = "zfam-certificate/0";
  EXPECT_THROW(certificate_from_json(broken), CertificateError);
  EXPECT_THROW(load_certificate("/nonexistent/cert.json"), CertificateError);
}

TEST(Recovery, NormalOrderingUsesWitnessRelations) {
  const Domain QQ = Domain::rationals();
  EXPECT_EQ(RecoveryPoly::parse("w2*w1", 1, 0, QQ).to_string(), "w1*w2 + 1");
  EXPECT_EQ(RecoveryPoly::parse("z1 + 2*w1*w2 - 2*w1*w2*w1*w2", 1, 1, QQ).to_string(), "-2*w1^2*w2^2 + z1");
  EXPECT_EQ(RecoveryPoly::parse("w3*w1 - w1*w3", 2, 0, QQ).to_string(), "1");
  EXPECT_EQ(RecoveryPoly::parse("w3*w1 - w1*w3 + z2", 2, 2, QQ).to_string(), "z2 + 1");
  EXPECT_EQ(RecoveryPoly::parse("w4*w3 - w3*w4 + w2*w1", 2, 0, QQ).to_string(), "w1*w2");
  EXPECT_THROW(RecoveryPoly::parse("w1*x", 1, 0, QQ), ParseError);
  EXPECT_THROW(RecoveryPoly::parse("z2", 1, 1, QQ), ParseError);
}

TEST(Reduction, SweepOverSmallPrimes) {
  for (const char* name : {"sl2", "a1_z2"}) {
    auto c = shipped(name);
    auto two = reduce_mod_p(c, 2);
    ASSERT_TRUE(std::holds_alternative<BadPrime>(two)) << name;
    for (std::uint64_t p = 3; p <= 97; ++p) {
      if (!is_prime(p)) continue;
      auto o = reduce_and_verify(c, p, fast());
      ASSERT_FALSE(o.bad) << name << " " << o.bad->to_string();
      EXPECT_EQ(o.report->overall(), Status::Pass) << name << " mod " << p << "\n" << o.report->to_text();
    }
  }
}

TEST(Reduction, BadPrimeLocations) {
  auto sl2 = std::get<BadPrime>(reduce_mod_p(shipped("sl2"), 2));
  EXPECT_EQ(sl2.location, "centers[0]");
  auto inv = std::get<BadPrime>(reduce_mod_p(shipped("a1_z2"), 2));
  EXPECT_EQ(inv.location, "witnesses[1]");

  auto avg = shipped("a1_z2");
  avg.invariant_method = nc::InvariantMethod::Average;
  EXPECT_EQ(std::get<BadPrime>(reduce_mod_p(avg, 2)).location, "invariant_method");
  EXPECT_FALSE(std::holds_alternative<BadPrime>(reduce_mod_p(avg, 3)));

  auto seven = shipped("sl2");
  seven.witnesses[1] = "inv(7*e.1) * (7/2*h.1)";
  EXPECT_EQ(verify_certificate(seven, fast()).overall(), Status::Pass);
  EXPECT_EQ(std::get<BadPrime>(reduce_mod_p(seven, 7)).location, "witnesses[1]");
}

TEST(Reduction, ReducedLiteralsLiveInThePrimeField) {
  auto r = std::get<WitnessCertificate>(reduce_mod_p(shipped("sl2"), 5));
  EXPECT_EQ(r.domain, Domain::modular(5));
  EXPECT_EQ(r.centers[0], "2*e.1*f.1 + 3*h.1^2 + 4*h.1");
  EXPECT_EQ(r.witnesses[1], "inv(2*e.1) * (h.1)");
  auto j = to_json(r);
  EXPECT_EQ(j["characteristic"], 5);
  EXPECT_EQ(certificate_from_json(nlohmann::json::parse(j.dump())).domain, Domain::modular(5));
  EXPECT_THROW(reduce_mod_p(r, 7), CertificateError);
}

TEST(Report, DeterministicOutput) {
  auto c = shipped("sl2");
  auto a = verify_certificate(c), b = verify_certificate(c);
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_json().dump(2), b.to_json().dump(2));
  EXPECT_EQ(a.to_json()["verdict"], "pass");
}
