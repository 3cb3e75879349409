#include "vilenkin/reference/oracles.hpp"

#include <cmath>
#include <numbers>

namespace vilenkin::reference {

Complex character(const ModulusSequence& ms, std::size_t d, Index n, Index cell) {
  double turns = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const auto m = ms.modulus(k);
    turns += static_cast<double>((n % m) * (cell % m)) / m;
    n /= m;
    cell /= m;
  }
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

Spectrum1D naive_forward(const CylinderGrid1D& f) {
  const auto& ms = f.modulus();
  Spectrum1D out(ms, f.depth());
  const double w = 1.0 / static_cast<double>(f.size());
  for (Index k = 0; k < f.size(); ++k) {
    Complex acc{};
    for (Index c = 0; c < f.size(); ++c) acc += f[c] * std::conj(character(ms, f.depth(), k, c));
    out[k] = acc * w;
  }
  return out;
}

CylinderGrid1D naive_inverse(const Spectrum1D& s) {
  const auto& ms = s.modulus();
  CylinderGrid1D out(ms, s.depth());
  for (Index c = 0; c < out.size(); ++c) {
    Complex acc{};
    for (Index k = 0; k < s.size(); ++k) acc += s[k] * character(ms, s.depth(), k, c);
    out[c] = acc;
  }
  return out;
}

double orthonormality_defect(const ModulusSequence& ms, std::size_t d) {
  const Index M = ms.scale(d);
  std::vector<Complex> table(M * M);
  for (Index k = 0; k < M; ++k)
    for (Index c = 0; c < M; ++c) table[k * M + c] = character(ms, d, k, c);
  double worst = 0.0;
  for (Index i = 0; i < M; ++i) {
    for (Index j = 0; j < M; ++j) {
      Complex acc{};
      for (Index c = 0; c < M; ++c) acc += table[i * M + c] * std::conj(table[j * M + c]);
      acc /= static_cast<double>(M);
      worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

std::vector<Complex> dirichlet_literal(const ModulusSequence& ms, std::size_t d, Index n) {
  const Index M = ms.scale(d);
  std::vector<Complex> out(M);
  for (Index c = 0; c < M; ++c)
    for (Index k = 0; k < n; ++k) out[c] += character(ms, d, k, c);
  return out;
}

namespace {

Index cell_sub(const ModulusSequence& ms, std::size_t d, Index a, Index b) {
  Index out = 0;
  for (std::size_t k = 0; k < d; ++k) {
    const auto m = ms.modulus(k);
    out += ((a % m + m - b % m) % m) * ms.scale(k);
    a /= m;
    b /= m;
  }
  return out;
}

}  // namespace

CylinderGrid1D convolution_partial_sum(const CylinderGrid1D& f, Index n) {
  const auto& ms = f.modulus();
  const std::size_t d = f.depth();
  const auto kernel = dirichlet_literal(ms, d, n);
  CylinderGrid1D out(ms, d);
  for (Index x = 0; x < f.size(); ++x) {
    Complex acc{};
    for (Index t = 0; t < f.size(); ++t) acc += f[t] * kernel[cell_sub(ms, d, x, t)];
    out[x] = acc / static_cast<double>(f.size());
  }
  return out;
}

CylinderGrid2D convolution_partial_sum_2d(const CylinderGrid2D& f, Index n, Index l) {
  const auto& ms = f.modulus();
  const std::size_t d = f.depth();
  const Index M = f.side();
  const auto kn = dirichlet_literal(ms, d, n);
  const auto kl = dirichlet_literal(ms, d, l);
  CylinderGrid2D out(ms, d);
  const double w = 1.0 / static_cast<double>(M * M);
  for (Index x = 0; x < M; ++x) {
    for (Index y = 0; y < M; ++y) {
      Complex acc{};
      for (Index s = 0; s < M; ++s) {
        const Complex a = kn[cell_sub(ms, d, x, s)];
        if (a == Complex{}) continue;
        for (Index t = 0; t < M; ++t) acc += f(s, t) * a * kl[cell_sub(ms, d, y, t)];
      }
      out(x, y) = acc * w;
    }
  }
  return out;
}

std::vector<Complex> naive_spectrum_2d(const CylinderGrid2D& f) {
  const auto& ms = f.modulus();
  const std::size_t d = f.depth();
  const Index M = f.side();
  std::vector<Complex> chars(M * M);
  for (Index k = 0; k < M; ++k)
    for (Index c = 0; c < M; ++c) chars[k * M + c] = character(ms, d, k, c);
  std::vector<Complex> out(M * M);
  const double w = 1.0 / static_cast<double>(M * M);
  for (Index i = 0; i < M; ++i) {
    for (Index j = 0; j < M; ++j) {
      Complex acc{};
      for (Index x = 0; x < M; ++x)
        for (Index y = 0; y < M; ++y)
          acc += f(x, y) * std::conj(chars[i * M + x] * chars[j * M + y]);
      out[i * M + j] = acc * w;
    }
  }
  return out;
}

CylinderGrid2D naive_rect_partial_sum(const CylinderGrid2D& f, Index M_cut, Index N_cut) {
  const auto& ms = f.modulus();
  const std::size_t d = f.depth();
  const Index M = f.side();
  const auto spec = naive_spectrum_2d(f);
  CylinderGrid2D out(ms, d);
  for (Index x = 0; x < M; ++x)
    for (Index y = 0; y < M; ++y) {
      Complex acc{};
      for (Index i = 0; i < M_cut; ++i)
        for (Index j = 0; j < N_cut; ++j)
          acc += spec[i * M + j] * character(ms, d, i, x) * character(ms, d, j, y);
      out(x, y) = acc;
    }
  return out;
}

}  // namespace vilenkin::reference
