#include "splitpile/necklace.hpp"

#include <algorithm>

#include "splitpile/errors.hpp"

namespace splitpile {

std::size_t least_rotation_index(std::string_view s) {
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  if (n == 0) return 0;
  // Booth's failure-function scan over the doubled string.
  const std::string d = std::string(s) + std::string(s);
  std::vector<std::ptrdiff_t> failure(d.size(), -1);
  std::ptrdiff_t k = 0;
  for (std::ptrdiff_t j = 1; j < 2 * n; ++j) {
    const char c = d[j];
    std::ptrdiff_t i = failure[j - k - 1];
    while (i != -1 && c != d[k + i + 1]) {
      if (c < d[k + i + 1]) k = j - i - 1;
      i = failure[i];
    }
    if (c != d[k + i + 1]) {
      // Here i == -1.
      if (c < d[k]) k = j;
      failure[j - k] = -1;
    } else {
      failure[j - k] = i + 1;
    }
  }
  return static_cast<std::size_t>(k % n);
}

std::string least_rotation(std::string_view s) {
  const std::size_t k = least_rotation_index(s);
  std::string out(s.substr(k));
  out.append(s.substr(0, k));
  return out;
}

Necklace::Necklace(std::string_view beads) {
  for (char c : beads) {
    if (c != kUp && c != kDown && c != kFlat) {
      throw AlphabetError("bead '" + std::string(1, c) + "' is not one of U, D, H");
    }
  }
  canonical_ = least_rotation(beads);
}

std::size_t Necklace::count(char bead) const {
  return static_cast<std::size_t>(std::ranges::count(canonical_, bead));
}

Necklace necklace_from_motzkin(const MotzkinWord& w) { return Necklace(kUp + w.str()); }

std::vector<std::size_t> cut_points(const Necklace& x) {
  const std::string& s = x.str();
  const std::size_t n = s.size();
  std::vector<std::size_t> out;
  for (std::size_t start = 0; start < n; ++start) {
    if (s[start] != kUp) continue;
    std::int64_t height = 0;
    bool dyck = true;
    for (std::size_t step = 1; step < n && dyck; ++step) {
      const char c = s[(start + step) % n];
      if (c == kUp) ++height;
      if (c == kDown && --height < 0) dyck = false;
    }
    if (dyck && height == 0) out.push_back(start);
  }
  return out;
}

MotzkinWord motzkin_from_necklace(const Necklace& x) {
  const std::size_t ups = x.count(kUp);
  const std::size_t downs = x.count(kDown);
  if (ups == 0 || downs + 1 != ups) {
    throw DomainError("necklace \"" + x.str() + "\" does not have one more U than D");
  }
  const std::vector<std::size_t> cuts = cut_points(x);
  if (cuts.size() != 1) {
    throw std::logic_error("necklace \"" + x.str() + "\" has " + std::to_string(cuts.size()) +
                           " cut points");
  }
  const std::string& s = x.str();
  const std::size_t start = cuts.front();
  std::string word = s.substr(start + 1);
  word.append(s.substr(0, start));
  return MotzkinWord(std::move(word));
}

std::vector<Necklace> enumerate_necklaces(std::size_t m, std::size_t n, std::uint64_t budget) {
  if (m == 0) throw DomainError("Necklaces_1(m, m-1, n) needs m >= 1");
  std::vector<Necklace> out;
  for (const MotzkinWord& w : generate_all(m - 1, n, budget)) out.push_back(necklace_from_motzkin(w));
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Necklace> enumerate_dh_necklaces(std::size_t m, std::size_t n, std::uint64_t budget) {
  if (m == 0 || n == 0) throw DomainError("DH necklaces need m >= 1 and n >= 1");
  std::vector<Necklace> out;
  for (const MotzkinWord& w : generate_dh(m, n - 1, budget)) out.push_back(necklace_from_motzkin(w));
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace splitpile
