#pragma once

#include "qaskey/askey_wilson.hpp"
#include "qaskey/basic_hyper.hpp"
#include "qaskey/errors.hpp"
#include "qaskey/multivar.hpp"
#include "qaskey/qcore.hpp"
#include "qaskey/quadrature.hpp"
