// fplab - factorpower semigroups and their simple modules

#include "fplab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "fplab/errors.hpp"

namespace fplab {

  IntegerPartition::IntegerPartition(std::vector<std::size_t> parts) {
    std::erase(parts, std::size_t{0});
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    size_  = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
  }

  IntegerPartition IntegerPartition::parse(std::string_view text) {
    std::vector<std::size_t> parts;
    std::size_t              value  = 0;
    bool                     digits = false;
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        value  = value * 10 + static_cast<std::size_t>(c - '0');
        digits = true;
      } else if (c == ',' || c == ' ') {
        if (digits) {
          parts.push_back(value);
        }
        value  = 0;
        digits = false;
      } else if (c == '(' || c == ')') {
        continue;
      } else {
        throw ValidationError("malformed partition \"" + std::string(text)
                              + "\"");
      }
    }
    if (digits) {
      parts.push_back(value);
    }
    return IntegerPartition(std::move(parts));
  }

  std::vector<IntegerPartition> IntegerPartition::all(std::size_t n) {
    std::vector<IntegerPartition> out;
    std::vector<std::size_t>      current;
    std::function<void(std::size_t, std::size_t)> rec
        = [&](std::size_t remaining, std::size_t max_part) {
            if (remaining == 0) {
              out.emplace_back(current);
              return;
            }
            for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
              current.push_back(p);
              rec(remaining - p, p);
              current.pop_back();
            }
          };
    rec(n, n);
    return out;
  }

  std::vector<std::size_t> IntegerPartition::multiplicities() const {
    std::vector<std::size_t> k(size_, 0);
    for (auto p : parts_) {
      ++k[p - 1];
    }
    return k;
  }

  IntegerPartition IntegerPartition::conjugate() const {
    std::vector<std::size_t> c;
    if (!parts_.empty()) {
      c.assign(parts_[0], 0);
      for (auto p : parts_) {
        for (std::size_t j = 0; j < p; ++j) {
          ++c[j];
        }
      }
    }
    return IntegerPartition(std::move(c));
  }

  std::string IntegerPartition::to_string() const {
    if (parts_.empty()) {
      return "0";
    }
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) {
        s += ',';
      }
      s += std::to_string(parts_[i]);
    }
    return s;
  }

}  // namespace fplab
