#pragma once

#include <zfam/ncalg/action.hpp>
#include <zfam/ncalg/element.hpp>
#include <zfam/ncalg/family.hpp>
#include <zfam/ncalg/filtration.hpp>
#include <zfam/ncalg/growth.hpp>
#include <zfam/ncalg/words.hpp>
