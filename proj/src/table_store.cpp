#include "saxl/table_store.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace saxl {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string serialize_ctab(const CharacterTable& table) {
  if (!table.complete()) {
    throw std::invalid_argument("only complete tables are serialized");
  }
  std::string body = "ctab-v1 N=" + std::to_string(table.degree()) +
                     " count=" + std::to_string(table.rows()) + "\n";
  for (const auto& label : table.labels()) {
    body += to_string(label);
    body += '\n';
  }
  for (std::size_t r = 0; r < table.rows(); ++r) {
    const auto row = table.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) body += ' ';
      body += std::to_string(row[c]);
    }
    body += '\n';
  }
  body += "sha256=" + sha256_hex(body) + "\n";
  return body;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (pos_ >= text_.size()) throw CorruptCacheError("ctab: truncated file");
    const std::size_t end = text_.find('\n', pos_);
    if (end == std::string_view::npos) {
      throw CorruptCacheError("ctab: missing newline");
    }
    std::string_view line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    return line;
  }
  bool done() const noexcept { return pos_ == text_.size(); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Int>
Int parse_int(std::string_view s, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw CorruptCacheError(std::string("ctab: bad ") + what + " '" +
                            std::string(s) + "'");
  }
  return value;
}

std::string_view after_prefix(std::string_view s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) {
    throw CorruptCacheError("ctab: expected '" + std::string(prefix) + "'");
  }
  return s.substr(prefix.size());
}

}  // namespace

CharacterTable parse_ctab(std::string_view bytes) {
  // The digest line is the last line; everything before it is hashed.
  if (bytes.empty() || bytes.back() != '\n') {
    throw CorruptCacheError("ctab: missing trailing newline");
  }
  const std::size_t digest_start = bytes.rfind('\n', bytes.size() - 2);
  const std::size_t body_size =
      digest_start == std::string_view::npos ? 0 : digest_start + 1;
  const std::string_view body = bytes.substr(0, body_size);
  const std::string_view digest_line =
      bytes.substr(body_size, bytes.size() - body_size - 1);
  const std::string_view stored = after_prefix(digest_line, "sha256=");
  if (stored != sha256_hex(body)) {
    throw CorruptCacheError("ctab: sha256 digest mismatch");
  }

  LineReader lines(body);
  const std::string_view header = lines.next();
  const std::size_t space = header.find(" count=");
  if (space == std::string_view::npos) throw CorruptCacheError("ctab: bad header");
  const auto n = parse_int<std::uint32_t>(
      after_prefix(header.substr(0, space), "ctab-v1 N="), "degree");
  const auto count =
      parse_int<std::size_t>(header.substr(space + 7), "count");
  if (n > kMaxCharacterDegree) throw CorruptCacheError("ctab: degree out of range");
  const auto expected = enumerate_partitions(n);
  if (count != expected.size()) throw CorruptCacheError("ctab: wrong class count");
  for (const auto& label : expected) {
    const std::string_view line = lines.next();
    if (line != to_string(label)) {
      throw CorruptCacheError("ctab: label '" + std::string(line) +
                              "' out of canonical order");
    }
  }
  std::vector<std::int64_t> values;
  values.reserve(count * count);
  for (std::size_t r = 0; r < count; ++r) {
    std::string_view line = lines.next();
    std::size_t fields = 0;
    while (true) {
      const std::size_t sep = line.find(' ');
      values.push_back(parse_int<std::int64_t>(line.substr(0, sep), "value"));
      ++fields;
      if (sep == std::string_view::npos) break;
      line.remove_prefix(sep + 1);
    }
    if (fields != count) throw CorruptCacheError("ctab: row width mismatch");
  }
  if (!lines.done()) throw CorruptCacheError("ctab: trailing content");
  std::vector<std::size_t> columns(count);
  for (std::size_t i = 0; i < count; ++i) columns[i] = i;
  return CharacterTable(n, std::move(columns), std::move(values));
}

std::filesystem::path ctab_path(const std::filesystem::path& dir,
                                std::uint32_t n) {
  return dir / ("ctab-v1-N" + std::to_string(n) + ".txt");
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view bytes) {
  std::random_device rd;
  auto tmp = path;
  tmp += ".tmp." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

const CharacterTable& TableStore::table(std::uint32_t n) {
  std::lock_guard lock(mutex_);
  if (auto it = tables_.find(n); it != tables_.end()) {
    last_ = Source::memory;
    return *it->second;
  }
  std::unique_ptr<CharacterTable> table;
  if (options_.cache_dir) {
    const auto path = ctab_path(*options_.cache_dir, n);
    if (std::filesystem::exists(path)) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      table = std::make_unique<CharacterTable>(parse_ctab(buffer.str()));
      last_ = Source::disk;
    }
  }
  if (!table) {
    TableOptions build;
    build.jobs = options_.jobs;
    table = std::make_unique<CharacterTable>(build_character_table(n, build));
    last_ = Source::built;
    if (options_.cache_dir) {
      std::filesystem::create_directories(*options_.cache_dir);
      write_file_atomic(ctab_path(*options_.cache_dir, n), serialize_ctab(*table));
    }
  }
  return *tables_.emplace(n, std::move(table)).first->second;
}

TableStore::Source TableStore::last_source() const {
  std::lock_guard lock(mutex_);
  return last_;
}

}  // namespace saxl
