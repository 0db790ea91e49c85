#pragma once

#include "cbel/cbba.hpp"
#include "cbel/classical.hpp"
#include "cbel/complex.hpp"
#include "cbel/errors.hpp"
#include "cbel/frame.hpp"
#include "cbel/io.hpp"
#include "cbel/transforms.hpp"
