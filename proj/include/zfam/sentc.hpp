#pragma once

#include <zfam/sentc/construct.hpp>
#include <zfam/sentc/contexts.hpp>
#include <zfam/sentc/emit.hpp>
#include <zfam/sentc/profile.hpp>
#include <zfam/sentc/sentence.hpp>
