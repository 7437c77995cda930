// Copyright 2026 The nihoperm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "nihoperm/error.hpp"
#include "nihoperm/field.hpp"
#include "nihoperm/gf2x.hpp"
#include "nihoperm/analysis.hpp"
#include "nihoperm/niho.hpp"
#include "nihoperm/numtheory.hpp"
#include "nihoperm/parallel.hpp"
#include "nihoperm/perm.hpp"
#include "nihoperm/poly.hpp"
#include "nihoperm/unit_circle.hpp"
