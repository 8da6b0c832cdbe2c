#include "splitpile/motzkin.hpp"

#include <algorithm>
#include <iterator>

#include "splitpile/errors.hpp"

namespace splitpile {

bool validate_motzkin(std::string_view letters) {
  std::int64_t height = 0;
  bool prefix_ok = true;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    switch (letters[i]) {
      case kUp:
        ++height;
        break;
      case kDown:
        if (--height < 0) prefix_ok = false;
        break;
      case kFlat:
        break;
      default:
        throw AlphabetError("letter '" + std::string(1, letters[i]) + "' at position " +
                            std::to_string(i + 1) + " is not one of U, D, H");
    }
  }
  return prefix_ok && height == 0;
}

MotzkinWord::MotzkinWord(std::string letters) : letters_(std::move(letters)) {
  if (!validate_motzkin(letters_)) throw DomainError("\"" + letters_ + "\" is not a Motzkin word");
}

std::size_t MotzkinWord::ups() const {
  return static_cast<std::size_t>(std::ranges::count(letters_, kUp));
}

std::size_t MotzkinWord::flats() const {
  return static_cast<std::size_t>(std::ranges::count(letters_, kFlat));
}

std::string MotzkinWord::dyck_reduction() const {
  std::string out;
  std::ranges::copy_if(letters_, std::back_inserter(out), [](char c) { return c != kFlat; });
  return out;
}

bool is_dh_motzkin(const MotzkinWord& w) {
  const auto first_flat = w.str().find(kFlat);
  if (first_flat == std::string::npos) return true;
  const auto first_down = w.str().find(kDown);
  return first_down != std::string::npos && first_down < first_flat;
}

namespace {

void check_budget(const BigInt& count, std::uint64_t budget, std::size_t ups, std::size_t flats) {
  if (count > budget) {
    throw BudgetExceeded("M(" + std::to_string(ups) + "," + std::to_string(flats) + ") has " +
                         count.str() + " words, budget is " + std::to_string(budget));
  }
}

// Depth-first over letters in D < H < U order yields lexicographic output.
void extend(std::string& prefix, std::size_t ups_left, std::size_t downs_left,
            std::size_t flats_left, std::size_t height, std::vector<MotzkinWord>& out) {
  if (ups_left == 0 && downs_left == 0 && flats_left == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (downs_left > 0 && height > 0) {
    prefix.push_back(kDown);
    extend(prefix, ups_left, downs_left - 1, flats_left, height - 1, out);
    prefix.pop_back();
  }
  if (flats_left > 0) {
    prefix.push_back(kFlat);
    extend(prefix, ups_left, downs_left, flats_left - 1, height, out);
    prefix.pop_back();
  }
  if (ups_left > 0) {
    prefix.push_back(kUp);
    extend(prefix, ups_left - 1, downs_left, flats_left, height + 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MotzkinWord> generate_all(std::size_t ups, std::size_t flats, std::uint64_t budget) {
  const BigInt count = count_motzkin(ups, flats);
  check_budget(count, budget, ups, flats);
  std::vector<MotzkinWord> out;
  out.reserve(static_cast<std::size_t>(count));
  std::string prefix;
  prefix.reserve(2 * ups + flats);
  extend(prefix, ups, ups, flats, 0, out);
  return out;
}

std::vector<MotzkinWord> generate_dh(std::size_t ups, std::size_t flats, std::uint64_t budget) {
  std::vector<MotzkinWord> out;
  for (MotzkinWord& w : generate_all(ups, flats, budget)) {
    if (is_dh_motzkin(w)) out.push_back(std::move(w));
  }
  return out;
}

BigInt count_motzkin(std::size_t ups, std::size_t flats) {
  return exact_div(binomial(2 * ups, ups) * binomial(2 * ups + flats, flats), ups + 1);
}

BigInt count_dh(std::size_t ups, std::size_t flats) {
  if (ups == 0) throw DomainError("count_dh needs at least one U");
  const std::size_t n = flats + 1;
  return exact_div(binomial(2 * ups + n - 1, ups - 1) * binomial(ups + n - 2, ups - 1), ups);
}

BigInt count_syt_hook(std::size_t ups, std::size_t flats) {
  if (ups == 0) throw DomainError("count_syt_hook needs at least one U");
  const std::size_t m = ups;
  const std::size_t n = flats + 1;
  const BigInt hooks = BigInt(n + m) * (n + m - 1) * factorial(m) * factorial(m - 1) *
                       factorial(n - 1);
  return exact_div(factorial(2 * m + n - 1), hooks);
}

bool StandardYoungTableau::is_standard() const {
  if (shape.size() != rows.size()) return false;
  std::size_t total = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != shape[r] || shape[r] == 0) return false;
    if (r > 0 && shape[r] > shape[r - 1]) return false;
    total += shape[r];
  }
  std::vector<bool> seen(total + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::size_t x = rows[r][c];
      if (x == 0 || x > total || seen[x]) return false;
      seen[x] = true;
      if (c > 0 && rows[r][c - 1] >= x) return false;
      if (r > 0 && rows[r - 1][c] >= x) return false;
    }
  }
  return true;
}

StandardYoungTableau syt_from_dh(const MotzkinWord& w) {
  if (w.ups() == 0) throw DomainError("tableau needs a word with at least one U");
  if (!is_dh_motzkin(w)) {
    throw DomainError("\"" + w.str() + "\" has an H before its first D; the first column would not increase");
  }
  StandardYoungTableau t;
  t.rows.resize(2);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t position = i + 1;
    switch (w[i]) {
      case kUp:
        t.rows[0].push_back(position);
        break;
      case kDown:
        t.rows[1].push_back(position);
        break;
      default:
        t.rows.push_back({position});
    }
  }
  for (const auto& row : t.rows) t.shape.push_back(row.size());
  return t;
}

MotzkinWord dh_from_syt(const StandardYoungTableau& t) {
  if (!t.is_standard()) throw DomainError("not a standard Young tableau");
  if (t.shape.size() < 2 || t.shape[0] != t.shape[1]) {
    throw DomainError("tableau shape must be (u, u, 1, ..., 1)");
  }
  for (std::size_t r = 2; r < t.shape.size(); ++r) {
    if (t.shape[r] != 1) throw DomainError("tableau shape must be (u, u, 1, ..., 1)");
  }
  const std::size_t total = 2 * t.shape[0] + (t.shape.size() - 2);
  std::string letters(total, kFlat);
  for (std::size_t x : t.rows[0]) letters[x - 1] = kUp;
  for (std::size_t x : t.rows[1]) letters[x - 1] = kDown;
  // Column-strictness forces the prefix property and the DH condition.
  MotzkinWord w(std::move(letters));
  if (!is_dh_motzkin(w)) throw DomainError("tableau does not encode a DH-Motzkin word");
  return w;
}

std::string ascii_path(const MotzkinWord& w) {
  std::size_t peak = 0;
  std::size_t height = 0;
  for (char c : w.str()) {
    if (c == kUp) peak = std::max(peak, ++height);
    if (c == kDown) --height;
  }
  const std::size_t levels = peak + 1;
  std::vector<std::string> canvas(levels, std::string(w.size(), ' '));
  height = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == kUp) {
      canvas[height][i] = '/';
      ++height;
    } else if (w[i] == kDown) {
      --height;
      canvas[height][i] = '\\';
    } else {
      canvas[height][i] = '_';
    }
  }
  std::string out;
  for (std::size_t level = levels; level-- > 0;) {
    std::string line = canvas[level];
    line.erase(line.find_last_not_of(' ') + 1);
    if (line.empty() && out.empty()) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace splitpile
