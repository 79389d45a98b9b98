#pragma once

#include <zfam/polycore/coefficient.hpp>
#include <zfam/polycore/decide.hpp>
#include <zfam/polycore/groebner.hpp>
#include <zfam/polycore/linalg.hpp>
#include <zfam/polycore/monomial.hpp>
#include <zfam/polycore/poly.hpp>
#include <zfam/polycore/text.hpp>
