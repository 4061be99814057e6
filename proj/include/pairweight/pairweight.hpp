// Copyright 2026 The pairweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAIRWEIGHT_PAIRWEIGHT_HPP
#define PAIRWEIGHT_PAIRWEIGHT_HPP

#include "pairweight/cyclotomy.hpp"
#include "pairweight/distribution.hpp"
#include "pairweight/field.hpp"
#include "pairweight/numeric.hpp"
#include "pairweight/paircode.hpp"
#include "pairweight/render.hpp"
#include "pairweight/verify.hpp"

#endif  // PAIRWEIGHT_PAIRWEIGHT_HPP
