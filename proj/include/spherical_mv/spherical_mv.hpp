/*
 * Copyright 2026 The spherical_mv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file spherical_mv.hpp
 * @brief Umbrella header for the whole library.
 */
#pragma once

#include "acceptance.hpp"
#include "certifier.hpp"
#include "complexgrp.hpp"
#include "errors.hpp"
#include "euclid.hpp"
#include "euclid_json.hpp"
#include "formal_series.hpp"
#include "hcseries.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "rankone.hpp"
#include "report_io.hpp"
#include "rootdata.hpp"
#include "specfun.hpp"
