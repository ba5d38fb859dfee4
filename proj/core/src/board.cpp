#include "ferrers/board.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ferrers {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] < parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly increasing");
    if (parts_[i] < static_cast<int>(i) + 1)
      throw std::invalid_argument(
          "partition must contain the staircase (lambda_i >= i)");
  }
}

Partition Partition::from_gjw(const GjwSequence& g) {
  std::vector<int> parts(g.entries().size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i] = g.entries()[i] + static_cast<int>(i) + 1;
  return Partition(std::move(parts));
}

GjwSequence Partition::gjw() const {
  std::vector<int> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i)
    out[i] = parts_[i] - static_cast<int>(i) - 1;
  return GjwSequence(std::move(out));
}

bool Partition::conjugable() const {
  return !parts_.empty() && parts_.back() == rows() + 1;
}

Partition Partition::conjugate() const {
  if (!conjugable())
    throw std::invalid_argument(
        "conjugation requires the top row to have rows()+1 boxes");
  const int n = rows();
  // Augmented board has rows lambda_1..lambda_n, n+1; reflecting across the
  // upper-left to lower-right diagonal sends box (i, j) to (n+2-j, n+2-i).
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    const int need = n + 2 - i;
    int cnt = 1;  // the appended full row always counts
    for (int r = 1; r <= n; ++r)
      if (part(r) >= need) ++cnt;
    out[i - 1] = cnt;
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

GjwSequence::GjwSequence(std::vector<int> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0)
      throw std::invalid_argument("GJW entries must be nonnegative");
    if (i > 0 && entries_[i] < entries_[i - 1] - 1)
      throw std::invalid_argument("GJW sequence cannot drop by more than 1");
  }
}

std::string GjwSequence::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

Block::Block(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("block cannot be empty");
  for (int e : entries_)
    if (e < 1) throw std::invalid_argument("block entries must be positive");
}

std::string Block::to_string() const {
  bool digits = std::all_of(entries_.begin(), entries_.end(),
                            [](int e) { return e <= 9; });
  std::ostringstream os;
  // entries above 9 would collide with digit strings, so those blocks are
  // rendered parenthesized and comma-separated
  if (!digits) os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i && !digits) os << ',';
    os << entries_[i];
  }
  if (!digits) os << ')';
  return os.str();
}

std::vector<Block> blocks(const GjwSequence& g) {
  std::vector<Block> out;
  std::vector<int> cur;
  for (int a : g.entries()) {
    if (a == 0) continue;  // zeros never occur inside a block
    cur.push_back(a);
    if (a == 1) {
      out.emplace_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.emplace_back(std::move(cur));
  return out;
}

Block conjugate_block(const Block& b) {
  if (!b.ends_in_one())
    throw std::invalid_argument("only blocks ending in 1 have conjugates");
  Partition p = Partition::from_gjw(GjwSequence(b.entries()));
  return Block(p.conjugate().gjw().entries());
}

Block canonical_block(const Block& b) {
  if (!b.ends_in_one()) return b;
  Block c = conjugate_block(b);
  return std::min(b, c);
}

NormalForm normal_form(const GjwSequence& g) {
  NormalForm nf;
  for (const Block& b : blocks(g)) {
    if (b.ends_in_one())
      nf.one_blocks.push_back(canonical_block(b));
    else
      nf.tail = b;  // only the last block can fail to end in 1
  }
  std::sort(nf.one_blocks.begin(), nf.one_blocks.end());
  return nf;
}

std::string NormalForm::to_line() const {
  std::ostringstream os;
  os << "blocks:";
  if (one_blocks.empty()) {
    os << ' ';
  } else {
    for (std::size_t i = 0; i < one_blocks.size(); ++i)
      os << (i ? " | " : " ") << one_blocks[i].to_string();
    os << ' ';
  }
  os << "; tail: " << (tail ? tail->to_string() : "-");
  return os.str();
}

bool equivalent(const Partition& a, const Partition& b) {
  return normal_form(a.gjw()) == normal_form(b.gjw());
}

GjwSequence insert_zero_after_ones(const GjwSequence& g) {
  const auto& in = g.entries();
  std::vector<int> out;
  out.reserve(in.size() + 4);
  for (std::size_t i = 0; i < in.size(); ++i) {
    out.push_back(in[i]);
    if (in[i] == 1 && (i + 1 == in.size() || in[i + 1] != 0))
      out.push_back(0);
  }
  return GjwSequence(std::move(out));
}

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size())
      throw std::invalid_argument("trailing junk in integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Partition parse_board(const std::string& text) {
  if (text.rfind("g:", 0) == 0)
    return Partition::from_gjw(GjwSequence(parse_int_list(text.substr(2))));
  return Partition(parse_int_list(text));
}

}  // namespace ferrers
