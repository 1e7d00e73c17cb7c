// Copyright 2026 The hexstar Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace hexstar {

/// Worker count: hardware concurrency, capped by the HEXSTAR_THREADS
/// environment variable when it holds a positive integer.
int thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Each index
/// is visited exactly once; the first exception thrown is rethrown here.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace hexstar
