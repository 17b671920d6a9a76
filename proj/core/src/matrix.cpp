#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mahonian/permstats.hpp"

namespace mahonian {

ZeroOneMatrix::ZeroOneMatrix(int n, const std::vector<std::pair<int, int>>& ones)
    : n_(n),
      col_of_row_(static_cast<std::size_t>(n) + 1, 0),
      row_of_col_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) {
    throw std::invalid_argument("matrix dimension must be nonnegative");
  }
  for (const auto& [r, c] : ones) {
    if (r < 1 || r > n || c < 1 || c > n) {
      throw std::invalid_argument("cell (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") outside the " + std::to_string(n) + "x" +
                                  std::to_string(n) + " matrix");
    }
    if (col_of_row_[static_cast<std::size_t>(r)] != 0) {
      throw std::invalid_argument("row " + std::to_string(r) + " holds two 1s");
    }
    if (row_of_col_[static_cast<std::size_t>(c)] != 0) {
      throw std::invalid_argument("column " + std::to_string(c) + " holds two 1s");
    }
    col_of_row_[static_cast<std::size_t>(r)] = c;
    row_of_col_[static_cast<std::size_t>(c)] = r;
  }
}

std::vector<std::pair<int, int>> ZeroOneMatrix::ones() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= n_; ++r) {
    if (col_of_row(r) != 0) {
      out.emplace_back(r, col_of_row(r));
    }
  }
  return out;
}

std::string ZeroOneMatrix::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n_;
  doc["ones"] = nlohmann::ordered_json::array();
  for (const auto& [r, c] : ones()) {
    doc["ones"].push_back({r, c});
  }
  return doc.dump();
}

ZeroOneMatrix ZeroOneMatrix::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> cells;
    for (const auto& cell : doc.at("ones")) {
      if (!cell.is_array() || cell.size() != 2) {
        throw std::invalid_argument("matrix cells must be [row, col] pairs");
      }
      cells.emplace_back(cell[0].get<int>(), cell[1].get<int>());
    }
    return ZeroOneMatrix(doc.at("n").get<int>(), cells);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad matrix JSON: ") + e.what());
  }
}

ZeroOneMatrix word_to_matrix(const LaguerreWord& w) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_hole()) {
      cells.emplace_back(static_cast<int>(i) + 1, w[i].value());
    }
  }
  return ZeroOneMatrix(w.n(), cells);
}

LaguerreWord matrix_to_word(const ZeroOneMatrix& m) {
  std::vector<int> codes(static_cast<std::size_t>(m.n()), 0);
  for (int r = 1; r <= m.n(); ++r) {
    codes[static_cast<std::size_t>(r) - 1] = m.col_of_row(r);
  }
  return LaguerreWord::from_codes(codes);
}

int matrix_survivor_inv(const ZeroOneMatrix& m) {
  int survivors = 0;
  for (int r = 1; r <= m.n(); ++r) {
    for (int c = 1; c <= m.n(); ++c) {
      if (m.at(r, c)) {
        continue;
      }
      const int one_row = m.row_of_col(c);
      const int one_col = m.col_of_row(r);
      const bool below_one = one_row != 0 && one_row < r;
      const bool right_of_one = one_col != 0 && one_col < c;
      const bool isolated = one_row == 0 && one_col == 0;
      if (!below_one && !right_of_one && !isolated) {
        ++survivors;
      }
    }
  }
  return survivors;
}

int matrix_survivor_maj(const ZeroOneMatrix& m) {
  int survivors = 0;
  for (int r = 1; r <= m.n(); ++r) {
    for (int c = 1; c <= m.n(); ++c) {
      if (m.at(r, c)) {
        continue;
      }
      const int one_row = m.row_of_col(c);
      if (one_row != 0) {
        // above the 1 of its column; the row just above that 1 either has a
        // 1 further right or no 1 at all
        if (r < one_row) {
          const int upper = m.col_of_row(one_row - 1);
          if (upper == 0 || upper > c) {
            ++survivors;
          }
        }
      } else if (m.col_of_row(r) > c) {
        ++survivors;
      }
    }
  }
  return survivors;
}

}  // namespace mahonian
