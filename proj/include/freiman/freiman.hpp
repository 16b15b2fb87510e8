#pragma once

#include "freiman/classify.hpp"
#include "freiman/covers.hpp"
#include "freiman/graph.hpp"
#include "freiman/ideal.hpp"
#include "freiman/report.hpp"
