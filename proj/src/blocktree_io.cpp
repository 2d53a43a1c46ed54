#include <cstring>
#include <string>

#include "matrixrepet/blocktree.hpp"
#include "matrixrepet/errors.hpp"

namespace matrixrepet {

namespace {

constexpr char kMagic[4] = {'2', 'D', 'B', 'T'};
constexpr std::uint8_t kVersion = 1;

class Writer {
 public:
  template <class T>
  void put(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::byte>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
  }
  void patch_u64(std::size_t at, std::uint64_t v) {
    for (std::size_t i = 0; i < 8; ++i) out[at + i] = static_cast<std::byte>((v >> (8 * i)) & 0xff);
  }
  std::vector<std::byte> out;
};

class Reader {
 public:
  explicit Reader(std::span<const std::byte> in) : in_(in) {}

  template <class T>
  T get() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t(std::to_integer<std::uint8_t>(in_[pos_ + i])) << (8 * i);
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }
  void need(std::size_t bytes) const {
    if (in_.size() - pos_ < bytes) throw SerializationError(SerializationError::Kind::Truncated, "block tree data is truncated");
  }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }

 private:
  std::span<const std::byte> in_;
  std::size_t pos_ = 0;
};

[[noreturn]] void corrupt(const std::string& what) {
  throw SerializationError(SerializationError::Kind::Corrupt, "corrupt block tree: " + what);
}

}  // namespace

std::vector<std::byte> serialize(const BlockTree& t) {
  Writer w;
  for (char c : kMagic) w.put(static_cast<std::uint8_t>(c));
  w.put(kVersion);
  w.put<std::uint64_t>(t.n());
  w.put<std::uint64_t>(t.padded_side());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(t.k()));
  w.put(static_cast<std::uint8_t>(t.origin()));
  w.put<std::uint64_t>(t.leaf_side());
  w.put<std::uint64_t>(t.first_side());
  w.put<std::uint16_t>(t.fill());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(t.levels().size()));
  for (const BlockLevel& level : t.levels()) {
    const std::size_t len_at = w.out.size();
    w.put<std::uint64_t>(0);
    const std::size_t start = w.out.size();
    w.put<std::uint64_t>(level.side);
    w.put<std::uint64_t>(level.nodes.size());
    for (const BlockNode& node : level.nodes) {
      w.put(static_cast<std::uint8_t>(node.kind));
      switch (node.kind) {
        case NodeKind::Internal:
          w.put(node.ref);
          break;
        case NodeKind::Pointer:
          w.put(node.ref);
          w.put(node.off_row);
          w.put(node.off_col);
          break;
        case NodeKind::Explicit:
          for (Symbol s : level.leaf_symbols(node)) w.put(s);
          break;
        case NodeKind::Padding:
          break;
      }
    }
    w.patch_u64(len_at, w.out.size() - start);
  }
  return std::move(w.out);
}

BlockTree deserialize(std::span<const std::byte> bytes) {
  if (bytes.size() < 5) throw SerializationError(SerializationError::Kind::BadVersion, "input too short for a block tree header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw SerializationError(SerializationError::Kind::BadMagic, "not a block tree (bad magic)");
  Reader r(bytes);
  for (int i = 0; i < 4; ++i) r.get<std::uint8_t>();
  const auto version = r.get<std::uint8_t>();
  if (version != kVersion) {
    throw SerializationError(SerializationError::Kind::BadVersion, "unsupported block tree version " + std::to_string(version));
  }
  const auto n = r.get<std::uint64_t>();
  const auto padded = r.get<std::uint64_t>();
  const auto k = r.get<std::uint32_t>();
  const auto origin = r.get<std::uint8_t>();
  const auto leaf_side = r.get<std::uint64_t>();
  const auto first_side = r.get<std::uint64_t>();
  const auto fill = r.get<std::uint16_t>();
  const auto level_count = r.get<std::uint32_t>();

  if (k < 2 || n == 0 || padded < n || origin > 1 || level_count == 0) corrupt("bad header fields");
  if (first_side == 0 || first_side > padded || padded % first_side != 0) corrupt("first level side does not divide the padded side");

  std::vector<BlockLevel> levels(level_count);
  std::size_t expected = (padded / first_side) * (padded / first_side);
  std::size_t expected_side = first_side;
  for (std::uint32_t L = 0; L < level_count; ++L) {
    const auto length = r.get<std::uint64_t>();
    r.need(length);
    const std::size_t end = r.pos() + length;
    BlockLevel& level = levels[L];
    level.side = r.get<std::uint64_t>();
    const auto count = r.get<std::uint64_t>();
    if (level.side != expected_side || count != expected) corrupt("level " + std::to_string(L) + " has the wrong shape");
    if (count > r.remaining()) corrupt("node count exceeds the data");
    const bool deepest = L + 1 == level_count;
    const std::size_t s = level.side;
    std::size_t children = 0;
    level.nodes.resize(count);
    for (BlockNode& node : level.nodes) {
      const auto tag = r.get<std::uint8_t>();
      if (tag > 3) corrupt("unknown node kind");
      node.kind = static_cast<NodeKind>(tag);
      switch (node.kind) {
        case NodeKind::Internal:
          if (deepest) corrupt("internal node at the deepest level");
          node.ref = r.get<std::uint32_t>();
          if (node.ref != children) corrupt("children are not laid out in order");
          children += std::size_t{k} * k;
          break;
        case NodeKind::Pointer:
          node.ref = r.get<std::uint32_t>();
          node.off_row = r.get<std::uint32_t>();
          node.off_col = r.get<std::uint32_t>();
          if (node.ref >= count || node.off_row >= s || node.off_col >= s) corrupt("pointer out of range");
          break;
        case NodeKind::Explicit:
          if (!deepest) corrupt("explicit node above the deepest level");
          node.ref = static_cast<std::uint32_t>(level.payload.size() / (s * s));
          r.need(2 * s * s);
          for (std::size_t i = 0; i < s * s; ++i) level.payload.push_back(r.get<Symbol>());
          break;
        case NodeKind::Padding:
          if (origin != static_cast<std::uint8_t>(TreeOrigin::Attractor)) corrupt("padding node in a first-occurrence tree");
          break;
      }
    }
    if (r.pos() != end) corrupt("level length mismatch");
    for (const BlockNode& node : level.nodes)
      if (node.kind == NodeKind::Pointer && !level.nodes[node.ref].marked()) corrupt("pointer to an unmarked node");
    if (!deepest) {
      if (s % k != 0) corrupt("level side not divisible by k");
      expected = children;
      expected_side = s / k;
    } else if (s > leaf_side) {
      corrupt("deepest level is larger than the leaf side");
    }
  }
  if (r.remaining() != 0) corrupt("trailing bytes");

  // Origins are implied by the child layout.
  const std::size_t grid = padded / first_side;
  for (std::size_t i = 0; i < grid * grid; ++i) levels[0].origins.push_back({i / grid * first_side, i % grid * first_side});
  for (std::size_t L = 0; L + 1 < levels.size(); ++L) {
    const std::size_t child = levels[L + 1].side;
    for (std::size_t i = 0; i < levels[L].nodes.size(); ++i) {
      if (levels[L].nodes[i].kind != NodeKind::Internal) continue;
      const Cell o = levels[L].origins[i];
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) levels[L + 1].origins.push_back({o.row + a * child, o.col + b * child});
    }
  }
  for (BlockLevel& level : levels) {
    level.index_origins();
    for (std::size_t i = 0; i < level.nodes.size(); ++i) {
      const BlockNode& node = level.nodes[i];
      if (node.kind != NodeKind::Pointer) continue;
      const Cell t = level.origins[node.ref];
      if (t.row + node.off_row + level.side > padded || t.col + node.off_col + level.side > padded) {
        corrupt("pointer occurrence leaves the matrix");
      }
    }
  }
  return BlockTree(n, padded, k, leaf_side, static_cast<TreeOrigin>(origin), fill, std::move(levels));
}

}  // namespace matrixrepet
