#include "decaykit/words/abelian.hpp"

#include <cstdlib>
#include <stdexcept>

namespace decaykit {

namespace {

using Matrix = std::vector<std::vector<Int>>;

void swap_columns(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// column[target] += factor * column[source]
void add_column(Matrix& m, std::size_t target, std::size_t source, Int factor) {
  for (auto& row : m) row[target] += factor * row[source];
}

void add_row(Matrix& m, std::size_t target, std::size_t source, Int factor) {
  for (std::size_t j = 0; j < m[target].size(); ++j) m[target][j] += factor * m[source][j];
}

}  // namespace

SmithForm smith_normal_form(Matrix a, std::size_t columns) {
  const std::size_t rows = a.size();
  Matrix v(columns, std::vector<Int>(columns, 0));
  for (std::size_t i = 0; i < columns; ++i) v[i][i] = 1;
  SmithForm out;

  for (std::size_t t = 0; t < std::min(rows, columns); ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = rows, pj = columns;
      Int best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < columns; ++j) {
          Int x = std::llabs(a[i][j]);
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) {
        out.column_transform = std::move(v);
        return out;
      }
      std::swap(a[t], a[pi]);
      swap_columns(a, t, pj);
      swap_columns(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Int q = a[i][t] / a[t][t];
        if (q != 0) add_row(a, i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        Int q = a[t][j] / a[t][t];
        if (q != 0) {
          add_column(a, j, t, -q);
          add_column(v, j, t, -q);
        }
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a non-divisible entry into row t and retry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(a, t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (!divisible) continue;
      break;
    }
    if (a[t][t] < 0) a[t][t] = -a[t][t];  // a row negation, V unaffected
    out.invariant_factors.push_back(a[t][t]);
  }
  out.column_transform = std::move(v);
  return out;
}

bool AbelianImage::is_zero() const {
  for (Int x : free) {
    if (x != 0) return false;
  }
  for (Int x : torsion) {
    if (x != 0) return false;
  }
  return true;
}

std::string AbelianImage::to_string() const {
  std::string out = "(";
  bool first = true;
  for (Int x : free) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  out += ";";
  for (Int x : torsion) out += " " + std::to_string(x);
  return out + ")";
}

Abelianization::Abelianization(const Presentation& presentation) : presentation_(presentation) {
  const std::size_t n = presentation.generators().size();
  Matrix relation_matrix;
  for (const auto& r : presentation.relators()) relation_matrix.push_back(presentation.exponent_sums(r));
  SmithForm snf = smith_normal_form(relation_matrix, n);
  transform_ = std::move(snf.column_transform);

  for (std::size_t i = 0; i < n; ++i) {
    if (i < snf.invariant_factors.size()) {
      if (snf.invariant_factors[i] > 1) {
        torsion_columns_.push_back(i);
        torsion_orders_.push_back(snf.invariant_factors[i]);
      }
    } else {
      free_columns_.push_back(i);
    }
  }
  free_rank_ = free_columns_.size();

  for (std::size_t c = 0; c < free_columns_.size(); ++c) {
    const std::size_t col = free_columns_[c];
    Int orientation = 0;
    if (c == 0 && presentation.peripheral()) {
      auto sums = presentation.exponent_sums(presentation.peripheral()->meridian);
      Int value = 0;
      for (std::size_t g = 0; g < n; ++g) value += sums[g] * transform_[g][col];
      orientation = value;
    }
    if (orientation == 0) {
      for (std::size_t g = 0; g < n && orientation == 0; ++g) orientation = transform_[g][col];
    }
    if (orientation < 0) {
      for (std::size_t g = 0; g < n; ++g) transform_[g][col] = -transform_[g][col];
    }
  }
}

AbelianImage Abelianization::image(const Word& w) const {
  auto sums = presentation_.exponent_sums(w);
  auto coordinate = [&](std::size_t col) {
    Int value = 0;
    for (std::size_t g = 0; g < sums.size(); ++g) value += sums[g] * transform_[g][col];
    return value;
  };
  AbelianImage out;
  for (std::size_t col : free_columns_) out.free.push_back(coordinate(col));
  for (std::size_t i = 0; i < torsion_columns_.size(); ++i) {
    out.torsion.push_back(floor_mod(coordinate(torsion_columns_[i]), torsion_orders_[i]));
  }
  return out;
}

AbelianImage Abelianization::generator_image(std::size_t index) const {
  return image(Word::generator(presentation_.generators().at(index)));
}

AbelianImage abelianize(const Word& w, const Presentation& presentation) {
  return Abelianization(presentation).image(w);
}

}  // namespace decaykit
