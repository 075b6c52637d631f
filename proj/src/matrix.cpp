// Copyright 2026 The cegame Authors
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

#include "cegame/matrix.hpp"

namespace cegame {

double Matrix::row_sum(std::size_t r) const {
  double total = 0.0;
  for (double v : row(r)) total += v;
  return total;
}

double Matrix::col_sum(std::size_t c, std::size_t first_row) const {
  double total = 0.0;
  for (std::size_t r = first_row; r < rows_; ++r) total += (*this)(r, c);
  return total;
}

}  // namespace cegame
