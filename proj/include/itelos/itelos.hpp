// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The itelos developers

#pragma once

#include "itelos/alignment.hpp"
#include "itelos/csv.hpp"
#include "itelos/etg_json.hpp"
#include "itelos/gates.hpp"
#include "itelos/ids.hpp"
#include "itelos/inception.hpp"
#include "itelos/integration.hpp"
#include "itelos/mapping.hpp"
#include "itelos/metrics.hpp"
#include "itelos/model.hpp"
#include "itelos/modeling.hpp"
#include "itelos/ntriples.hpp"
#include "itelos/pipeline.hpp"
#include "itelos/purpose_io.hpp"
#include "itelos/ratio.hpp"
#include "itelos/reports.hpp"
#include "itelos/similarity.hpp"
