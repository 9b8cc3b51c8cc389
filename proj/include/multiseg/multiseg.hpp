// Copyright 2026 The multiseg Authors.
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

#ifndef MULTISEG_MULTISEG_HPP_
#define MULTISEG_MULTISEG_HPP_

#include "multiseg/errors.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/irreducibility.hpp"
#include "multiseg/ladder.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/relevance.hpp"
#include "multiseg/search.hpp"
#include "multiseg/segment.hpp"
#include "multiseg/text.hpp"

#endif  // MULTISEG_MULTISEG_HPP_
