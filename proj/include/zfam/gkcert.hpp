#pragma once

#include <zfam/gkcert/certificate.hpp>
#include <zfam/gkcert/recovery.hpp>
#include <zfam/gkcert/reduce.hpp>
#include <zfam/gkcert/verify.hpp>
