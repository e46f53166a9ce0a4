#pragma once

// Umbrella header: the whole library in one include.

#include "saftw/config.hpp"
#include "saftw/convolution.hpp"
#include "saftw/errors.hpp"
#include "saftw/fft.hpp"
#include "saftw/io.hpp"
#include "saftw/localization.hpp"
#include "saftw/nsawt.hpp"
#include "saftw/numerics.hpp"
#include "saftw/params.hpp"
#include "saftw/saft.hpp"
#include "saftw/signals.hpp"
#include "saftw/threads.hpp"
#include "saftw/uncertainty.hpp"
#include "saftw/verify.hpp"
