#pragma once

#include "grip/cli.hpp"
#include "grip/config.hpp"
#include "grip/csv.hpp"
#include "grip/dynamics.hpp"
#include "grip/energy.hpp"
#include "grip/kinematics.hpp"
#include "grip/model.hpp"
#include "grip/oracle.hpp"
#include "grip/statics.hpp"
#include "grip/verify.hpp"
