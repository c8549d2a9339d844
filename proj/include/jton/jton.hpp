#pragma once

#include "jton/conformance.hpp"
#include "jton/datasets.hpp"
#include "jton/error.hpp"
#include "jton/number.hpp"
#include "jton/reader.hpp"
#include "jton/scanner.hpp"
#include "jton/token_accounting.hpp"
#include "jton/value.hpp"
#include "jton/writer.hpp"
