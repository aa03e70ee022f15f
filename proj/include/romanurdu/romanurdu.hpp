// Copyright (c) 2026 The romanurdu Authors
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

#ifndef ROMANURDU_ROMANURDU_HPP
#define ROMANURDU_ROMANURDU_HPP

#include "romanurdu/char_mapper.hpp"
#include "romanurdu/disambiguator.hpp"
#include "romanurdu/errors.hpp"
#include "romanurdu/evaluation.hpp"
#include "romanurdu/lexicon.hpp"
#include "romanurdu/pipeline.hpp"
#include "romanurdu/tokenizer.hpp"

#endif  // ROMANURDU_ROMANURDU_HPP
