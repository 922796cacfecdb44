// Copyright 2026 The qhorn Authors
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

#include "qhorn/arith.hpp"
#include "qhorn/enumerate.hpp"
#include "qhorn/error.hpp"
#include "qhorn/horn.hpp"
#include "qhorn/io.hpp"
#include "qhorn/lr.hpp"
#include "qhorn/memo.hpp"
#include "qhorn/parallel.hpp"
#include "qhorn/quantum.hpp"
#include "qhorn/rational.hpp"
#include "qhorn/schubert.hpp"
#include "qhorn/state.hpp"
#include "qhorn/witness.hpp"
