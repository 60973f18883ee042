// Copyright 2026 The gbeta Authors
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

#ifndef GBETA_GBETA_HPP
#define GBETA_GBETA_HPP

#include "gbeta/bigint.hpp"
#include "gbeta/census.hpp"
#include "gbeta/error.hpp"
#include "gbeta/expand.hpp"
#include "gbeta/field.hpp"
#include "gbeta/fseq.hpp"
#include "gbeta/literal.hpp"
#include "gbeta/parallel.hpp"
#include "gbeta/report.hpp"
#include "gbeta/rewrite.hpp"
#include "gbeta/verify.hpp"
#include "gbeta/words.hpp"

#endif // GBETA_GBETA_HPP
