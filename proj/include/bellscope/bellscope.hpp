// Copyright 2026 The Bellscope Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include "boolfn.hpp"
#include "conditional_table.hpp"
#include "correlator.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "lhv.hpp"
#include "lp.hpp"
#include "postselect.hpp"
#include "quantum.hpp"
#include "scalar.hpp"
#include "scenarios.hpp"
#include "search.hpp"
