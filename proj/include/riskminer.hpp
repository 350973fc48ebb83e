// Copyright 2026 The RiskMiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Umbrella header for the RiskMiner library.

#ifndef RISKMINER_RISKMINER_HPP
#define RISKMINER_RISKMINER_HPP

#include "riskminer/agreement.hpp"
#include "riskminer/analytics.hpp"
#include "riskminer/bundle.hpp"
#include "riskminer/classifier.hpp"
#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/evaluation.hpp"
#include "riskminer/io.hpp"
#include "riskminer/keywords.hpp"
#include "riskminer/labels.hpp"
#include "riskminer/log.hpp"
#include "riskminer/metrics.hpp"
#include "riskminer/pipeline.hpp"
#include "riskminer/porter.hpp"
#include "riskminer/segmenter.hpp"
#include "riskminer/synth.hpp"
#include "riskminer/text.hpp"
#include "riskminer/tfidf.hpp"

#endif  // RISKMINER_RISKMINER_HPP
