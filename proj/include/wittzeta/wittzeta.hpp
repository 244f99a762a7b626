// Copyright 2026 The wittzeta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "wittzeta/algebra/finite_field.hpp"
#include "wittzeta/algebra/mpoly.hpp"
#include "wittzeta/algebra/parse.hpp"
#include "wittzeta/algebra/poly.hpp"
#include "wittzeta/algebra/resultant.hpp"
#include "wittzeta/algebra/ring.hpp"
#include "wittzeta/algebra/series.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/lambda/sigma.hpp"
#include "wittzeta/motivic/k0.hpp"
#include "wittzeta/motivic/measure.hpp"
#include "wittzeta/motivic/point_count.hpp"
#include "wittzeta/motivic/variety.hpp"
#include "wittzeta/verdict.hpp"
#include "wittzeta/witt/rational.hpp"
#include "wittzeta/witt/witt_vector.hpp"
#include "wittzeta/zeta/kapranov.hpp"
