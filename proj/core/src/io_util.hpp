// Copyright 2026 The Binaura Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>

namespace binaura::detail {

// Writes the buffer to `path` via a temp file + rename, so readers never see
// a partial file. Throws IoError on failure.
void write_atomically(const std::string& path, const std::string& bytes);

}  // namespace binaura::detail
