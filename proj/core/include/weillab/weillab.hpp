// Copyright 2026 The weillab Authors
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

#include "weillab/arith.hpp"
#include "weillab/bounds.hpp"
#include "weillab/classify.hpp"
#include "weillab/error.hpp"
#include "weillab/gf2.hpp"
#include "weillab/label.hpp"
#include "weillab/two_adic.hpp"
#include "weillab/verdict.hpp"
#include "weillab/weil_quartic.hpp"
