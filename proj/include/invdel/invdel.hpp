// Copyright 2026 The invdel Authors
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

#ifndef INVDEL_INVDEL_HPP_
#define INVDEL_INVDEL_HPP_

#include "invdel/algebra.hpp"
#include "invdel/align.hpp"
#include "invdel/cayley.hpp"
#include "invdel/distance.hpp"
#include "invdel/error.hpp"
#include "invdel/evolve.hpp"
#include "invdel/genome.hpp"
#include "invdel/npc.hpp"
#include "invdel/pperm.hpp"

#endif  // INVDEL_INVDEL_HPP_
