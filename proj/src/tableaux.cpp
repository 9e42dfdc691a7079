#include "tkh/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "tkh/errors.hpp"

namespace tkh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw InputError("partition parts must be positive");
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) throw InputError("partition parts must be weakly decreasing");
}

int Partition::size() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts.empty()) return Partition();
  for (int j = 0; j < parts[0]; ++j) {
    int h = 0;
    for (int x : parts)
      if (x > j) ++h;
    c.push_back(h);
  }
  return Partition(c);
}

bool Partition::dominates(const Partition& o) const {
  int a = 0, b = 0;
  int n = std::max(length(), o.length());
  for (int i = 0; i < n; ++i) {
    a += (*this)[i];
    b += o[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    try {
      parts.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw InputError("bad partition: '" + s + "'");
    }
  }
  std::sort(parts.rbegin(), parts.rend());
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  return Partition(parts);
}

std::vector<BoxStat> box_stats(const Partition& p) {
  Partition c = p.conjugate();
  std::vector<BoxStat> out;
  for (int r = 0; r < p.length(); ++r)
    for (int j = 0; j < p[r]; ++j) {
      BoxStat b;
      b.row = r;
      b.col = j;
      b.arm = p[r] - j - 1;
      b.leg = c[j] - r - 1;
      b.coarm = j;
      b.coleg = r;
      out.push_back(b);
    }
  return out;
}

Integer hook_count(const Partition& p) {
  Integer num = factorial(static_cast<unsigned>(p.size()));
  Integer den = 1;
  for (const auto& b : box_stats(p)) den *= (b.arm + b.leg + 1);
  return num / den;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InputError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int maxp) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int k = 1; k <= maxp; ++k) {
      cur.push_back(k);
      rec(k);
      cur.pop_back();
    }
  };
  rec(max_part);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b.parts < a.parts;
  });
  return out;
}

std::vector<std::vector<int>> StandardTableau::rows() const {
  std::vector<std::vector<int>> r(static_cast<std::size_t>(shape.length()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i].assign(static_cast<std::size_t>(shape[static_cast<int>(i)]), 0);
  for (std::size_t i = 0; i < position.size(); ++i) {
    auto [row, col] = position[i];
    r[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = static_cast<int>(i) + 1;
  }
  return r;
}

SytEnumerator::SytEnumerator(Partition shape) : shape_(std::move(shape)) {
  const int n = shape_.size();
  word_.assign(static_cast<std::size_t>(n), 0);
  counts_.assign(static_cast<std::size_t>(shape_.length()) + 1, 0);
  tab_.shape = shape_;
}

bool SytEnumerator::fill_from(std::size_t pos) {
  // Greedy smallest completion; always succeeds when the prefix is valid.
  for (std::size_t i = pos; i < word_.size(); ++i) {
    int r = 0;
    for (; r < shape_.length(); ++r) {
      if (counts_[r] < shape_[r] && (r == 0 || counts_[r - 1] > counts_[r])) break;
    }
    if (r == shape_.length()) return false;
    word_[i] = r;
    ++counts_[r];
  }
  return true;
}

bool SytEnumerator::next() {
  if (done_) return false;
  const std::size_t n = word_.size();
  if (!started_) {
    started_ = true;
    if (!fill_from(0)) {
      done_ = true;
      return false;
    }
    build();
    return true;
  }
  // Backtrack: find the last position whose row can be increased.
  for (std::size_t k = n; k-- > 0;) {
    int cur = word_[k];
    --counts_[cur];
    for (int r = cur + 1; r < shape_.length(); ++r) {
      if (counts_[r] < shape_[r] && (r == 0 || counts_[r - 1] > counts_[r])) {
        word_[k] = r;
        ++counts_[r];
        if (fill_from(k + 1)) {
          build();
          return true;
        }
        // Cannot happen for valid shapes; undo defensively.
        --counts_[r];
      }
    }
  }
  done_ = true;
  return false;
}

void SytEnumerator::build() {
  tab_.position.assign(word_.size(), {0, 0});
  std::vector<int> fill(static_cast<std::size_t>(shape_.length()), 0);
  for (std::size_t i = 0; i < word_.size(); ++i) {
    int r = word_[i];
    tab_.position[i] = {r, fill[r]++};
  }
}

std::vector<StandardTableau> syt_of(const Partition& shape) {
  std::vector<StandardTableau> out;
  SytEnumerator it(shape);
  while (it.next()) out.push_back(it.current());
  return out;
}

Poly box_weight(const StandardTableau& t, int i, const std::vector<std::string>& vars, int qvar, int tvar) {
  if (i < 1 || i > t.size()) throw IndexError("box index out of range");
  auto [row, col] = t.position[static_cast<std::size_t>(i - 1)];
  Exp e(vars.size(), 0);
  e[qvar] += col;
  e[tvar] -= row;
  return Poly::monomial(vars, e);
}

}  // namespace tkh
