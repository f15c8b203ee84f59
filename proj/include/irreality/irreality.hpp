#pragma once

// Umbrella header.

#include "irreality/errors.hpp"
#include "irreality/tolerance.hpp"
#include "irreality/qstate.hpp"
#include "irreality/channels.hpp"
#include "irreality/quantifiers.hpp"
#include "irreality/dilation.hpp"
#include "irreality/assertion.hpp"
#include "irreality/scenarios.hpp"
#include "irreality/config.hpp"
#include "irreality/report.hpp"
#include "irreality/runner.hpp"
