#pragma once

#include <zfam/orefrac/fraction.hpp>
#include <zfam/orefrac/ore.hpp>
