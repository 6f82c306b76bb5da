// Text and JSON rendering of finite matrices and of finite windows of
// infinite matrices.
#pragma once

#include <cstddef>
#include <string>

#include <json.hpp>

#include "commat/matrix.hpp"
#include "commat/ring.hpp"

namespace commat {

namespace detail {

template <PrintableRing R>
std::pair<std::size_t, std::size_t> render_extent(const Mat<R>& A, std::size_t window) {
  const std::size_t r = A.rows().is_finite() ? A.rows().count() : window;
  const std::size_t c = A.cols().is_finite() ? A.cols().count() : window;
  return {r, c};
}

} // namespace detail

// Row-major array of canonical element strings plus shape and tri_bound
// metadata. `window` caps each infinite dimension.
template <PrintableRing R>
nlohmann::json mat_to_json(const Mat<R>& A, std::size_t window = 8) {
  const auto [r, c] = detail::render_extent(A, window);
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < r; ++i) {
    nlohmann::json rowv = nlohmann::json::array();
    for (std::size_t j = 0; j < c; ++j) rowv.push_back(element_str(A.entry(i, j)));
    entries.push_back(std::move(rowv));
  }
  nlohmann::json out;
  out["rows"] = A.rows().is_finite() ? nlohmann::json(A.rows().count()) : nlohmann::json("inf");
  out["cols"] = A.cols().is_finite() ? nlohmann::json(A.cols().count()) : nlohmann::json("inf");
  out["tri_bound"] = A.tri_bound() ? nlohmann::json(*A.tri_bound()) : nlohmann::json(nullptr);
  if (!A.rows().is_finite() || !A.cols().is_finite())
    out["window"] = {r, c};
  out["entries"] = std::move(entries);
  return out;
}

template <PrintableRing R>
std::string mat_to_text(const Mat<R>& A, std::size_t window = 8) {
  const auto [r, c] = detail::render_extent(A, window);
  std::string out;
  if (!A.rows().is_finite() || !A.cols().is_finite()) {
    out += A.shape_str() + " matrix, " + std::to_string(r) + "x" + std::to_string(c) +
           " window";
    if (A.tri_bound()) out += ", tri_bound " + std::to_string(*A.tri_bound());
    out += "\n";
  }
  for (std::size_t i = 0; i < r; ++i) {
    out += "[";
    for (std::size_t j = 0; j < c; ++j) {
      if (j) out += ", ";
      out += element_str(A.entry(i, j));
    }
    out += "]\n";
  }
  return out;
}

} // namespace commat
