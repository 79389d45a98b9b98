#pragma once

#include <zfam/rootsys/chevalley.hpp>
#include <zfam/rootsys/root_system.hpp>
#include <zfam/rootsys/weyl_group.hpp>
