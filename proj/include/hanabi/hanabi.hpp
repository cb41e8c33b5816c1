// Copyright 2026 The hanabi-adhoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HANABI_HANABI_HPP_
#define HANABI_HANABI_HPP_

#include "hanabi/agent.hpp"
#include "hanabi/analysis.hpp"
#include "hanabi/belief.hpp"
#include "hanabi/encoding.hpp"
#include "hanabi/external_agent.hpp"
#include "hanabi/harness.hpp"
#include "hanabi/knowledge.hpp"
#include "hanabi/move.hpp"
#include "hanabi/record.hpp"
#include "hanabi/rng.hpp"
#include "hanabi/rules.hpp"
#include "hanabi/state.hpp"
#include "hanabi/types.hpp"

#endif  // HANABI_HANABI_HPP_
