#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "saxl/characters.hpp"
#include "saxl/table_store.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace saxl;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() /
             ("saxl-test-" + name + "-" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("class data") {
  const auto three = class_data(3);
  REQUIRE(three.count() == 3);
  CHECK(three.classes[0] == Partition{3});
  CHECK(three.classes[1] == Partition{2, 1});
  CHECK(three.classes[2] == Partition{1, 1, 1});
  CHECK(three.centralizer_orders == std::vector<BigInt>{3, 2, 6});
  CHECK(three.class_size(0) == 2);
  CHECK(three.class_size(1) == 3);
  CHECK(three.class_size(2) == 1);
  CHECK(three.index_of(Partition{2, 1}) == 1);
  CHECK_THROWS_AS(three.index_of(Partition{2, 2}), PartitionError);

  const auto one = class_data(1);
  CHECK(one.count() == 1);
  CHECK(one.centralizer_orders[0] == 1);

  const auto zero = class_data(0);
  CHECK(zero.count() == 1);
  CHECK(zero.group_order == 1);

  for (unsigned n = 1; n <= 7; ++n) {
    const auto data = class_data(n);
    const auto brute = oracle::brute_class_sizes(n);
    REQUIRE(brute.size() == data.count());
    BigInt total = 0;
    for (std::size_t c = 0; c < data.count(); ++c) {
      REQUIRE(data.class_size(c) == brute.at(data.classes[c]));
      REQUIRE(data.group_order % data.centralizer_orders[c] == 0);
      total += data.class_size(c);
    }
    REQUIRE(total == data.group_order);
    if (n == 5) CHECK(data.count() == 7);
  }
}

TEST_CASE("character values on S_3") {
  CHECK(character_value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(character_value(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(character_value(Partition{2, 1}, Partition{3}) == -1);
  CHECK_THROWS_AS(character_value(Partition{2, 1}, Partition{2}), PartitionError);
}

TEST_CASE("trivial and sign characters") {
  for (std::uint32_t n = 1; n <= 9; ++n) {
    const auto table = build_character_table(n);
    const auto data = class_data(n);
    const auto trivial = table.row(table.row_index(Partition{n}));
    const auto sign = table.row(table.row_index(column(n)));
    for (std::size_t c = 0; c < data.count(); ++c) {
      REQUIRE(trivial[c] == 1);
      const auto parity = (n - data.classes[c].length()) % 2;
      REQUIRE(sign[c] == (parity == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("Murnaghan-Nakayama agrees with the Jacobi-Trudi oracle") {
  for (std::uint32_t n = 0; n <= 5; ++n) {
    const auto table = build_character_table(n);
    for (const auto& lambda : enumerate_partitions(n)) {
      for (const auto& c : enumerate_partitions(n)) {
        INFO(to_string(lambda), " at ", to_string(c));
        REQUIRE(table.value(lambda, c) == oracle::jacobi_trudi_character(lambda, c));
      }
    }
  }
  // A few larger spot checks of the oracle route.
  CHECK(character_value(Partition{4, 2, 1}, Partition{3, 2, 1, 1}) ==
        oracle::jacobi_trudi_character(Partition{4, 2, 1}, Partition{3, 2, 1, 1}));
  CHECK(character_value(Partition{3, 3, 2}, Partition{2, 2, 2, 2}) ==
        oracle::jacobi_trudi_character(Partition{3, 3, 2}, Partition{2, 2, 2, 2}));
}

TEST_CASE("small tables") {
  const auto t2 = build_character_table(2);
  // Columns (2), (1,1).
  CHECK(t2.value(Partition{2}, Partition{1, 1}) == 1);
  CHECK(t2.value(Partition{2}, Partition{2}) == 1);
  CHECK(t2.value(Partition{1, 1}, Partition{1, 1}) == 1);
  CHECK(t2.value(Partition{1, 1}, Partition{2}) == -1);

  const auto t3 = build_character_table(3);
  CHECK(t3.value(Partition{3}, Partition{1, 1, 1}) == 1);
  CHECK(t3.value(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(t3.value(Partition{1, 1, 1}, Partition{1, 1, 1}) == 1);

  const auto t0 = build_character_table(0);
  CHECK(t0.rows() == 1);
  CHECK(t0.at(0, 0) == 1);

  CHECK_THROWS_AS(build_character_table(kMaxCharacterDegree + 1), PartitionError);
}

TEST_CASE("orthogonality relations for N <= 8") {
  for (std::uint32_t n = 0; n <= 8; ++n) {
    const auto table = build_character_table(n);
    const auto data = class_data(n);
    const std::size_t k = data.count();
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        BigInt rows = 0, cols = 0;
        for (std::size_t c = 0; c < k; ++c) {
          rows += data.class_size(c) * table.at(a, c) * table.at(b, c);
          cols += BigInt(table.at(c, a)) * table.at(c, b);
        }
        REQUIRE(rows == (a == b ? data.group_order : BigInt(0)));
        REQUIRE(cols == (a == b ? data.centralizer_orders[a] : BigInt(0)));
      }
    }
  }
}

TEST_CASE("dimensions match the hook-length formula for N <= 10") {
  for (std::uint32_t n = 0; n <= 10; ++n) {
    const auto table = build_character_table(n);
    const std::size_t identity = table.rows() - 1;
    BigInt degree_sum = 0;
    for (std::size_t r = 0; r < table.rows(); ++r) {
      const BigInt dim = table.at(r, identity);
      REQUIRE(dim > 0);
      REQUIRE(dim == oracle::hook_dimension(table.labels()[r]));
      degree_sum += dim * dim;
    }
    REQUIRE(degree_sum == factorial(n));
  }
}

TEST_CASE("single rows and masked tables agree with the full table") {
  const std::uint32_t n = 12;
  const auto full = build_character_table(n);
  const Partition shape{5, 4, 2, 1};
  const auto row = character_row(shape, 3);
  const auto expect = full.row(full.row_index(shape));
  CHECK(std::equal(row.begin(), row.end(), expect.begin(), expect.end()));

  TableOptions masked;
  masked.columns = std::vector<std::size_t>{40, 3, 76, 3};
  const auto sub = build_character_table(n, masked);
  CHECK(sub.columns() == std::vector<std::size_t>{3, 40, 76});
  CHECK_FALSE(sub.complete());
  for (std::size_t r = 0; r < full.rows(); ++r) {
    for (std::size_t pos = 0; pos < sub.columns().size(); ++pos) {
      REQUIRE(sub.at(r, pos) == full.at(r, sub.columns()[pos]));
    }
  }
  CHECK_THROWS_AS(sub.value(shape, full.labels()[0]), std::out_of_range);

  // BigInt single-cell route.
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    const std::size_t r = rng() % full.rows();
    const std::size_t c = rng() % full.rows();
    REQUIRE(character_value(full.labels()[r], full.labels()[c]) == full.at(r, c));
  }
}

TEST_CASE("table builds are deterministic across thread counts and memo bounds") {
  for (std::uint32_t n : {9u, 14u}) {
    TableOptions one;
    TableOptions many;
    many.jobs = 4;
    TableOptions tiny_memo;
    tiny_memo.memo_capacity = 64;
    const auto a = build_character_table(n, one);
    const auto b = build_character_table(n, many);
    const auto c = build_character_table(n, tiny_memo);
    REQUIRE(a == b);
    REQUIRE(a == c);
    REQUIRE(serialize_ctab(a) == serialize_ctab(b));
  }
}

TEST_CASE("permutation characters") {
  const auto t3 = build_character_table(3);
  const auto psi = permutation_character(Partition{2, 1}, t3);
  // Classes (3), (2,1), (1,1,1).
  CHECK(psi == ClassFunction{0, 1, 3});

  for (std::uint32_t n = 1; n <= 6; ++n) {
    const auto table = build_character_table(n);
    const auto data = class_data(n);
    const auto ones = permutation_character(Partition{n}, table);
    CHECK(std::all_of(ones.begin(), ones.end(), [](const BigInt& x) { return x == 1; }));
    const auto regular = permutation_character(column(n), table);
    for (std::size_t c = 0; c + 1 < data.count(); ++c) REQUIRE(regular[c] == 0);
    REQUIRE(regular.back() == factorial(n));

    for (const auto& mu : enumerate_partitions(n)) {
      const auto values = permutation_character(mu, table);
      BigInt expected_identity = factorial(n);
      for (auto part : mu) expected_identity /= factorial(part);
      REQUIRE(values.back() == expected_identity);
      for (std::size_t c = 0; c < data.count(); ++c) {
        REQUIRE(values[c] >= 0);
        std::vector<long> comp(mu.begin(), mu.end());
        REQUIRE(values[c] == oracle::fixed_points(comp, data.classes[c]));
      }
    }
  }
  CHECK_THROWS_AS(permutation_character(Partition{2, 1}, build_character_table(4)),
                  std::invalid_argument);
}

TEST_CASE("inner products") {
  const auto table = build_character_table(3);
  const auto data = class_data(3);
  const auto chi21 = row_function(table, table.row_index(Partition{2, 1}));
  const auto chi3 = row_function(table, table.row_index(Partition{3}));
  const auto chi111 = row_function(table, table.row_index(Partition{1, 1, 1}));
  const auto psi21 = permutation_character(Partition{2, 1}, table);
  CHECK(character_inner_product(chi21, chi21, data) == 1);
  CHECK(character_inner_product(psi21, chi3, data) == 1);
  CHECK(character_inner_product(chi21, chi3, data) == 0);
  CHECK(character_inner_product(chi3, chi111, data) == 0);
  CHECK(inner_product(ClassFunction{1, 0, 0}, ClassFunction{1, 0, 0}, data) ==
        Rational(1, 3));
  CHECK_THROWS_AS(character_inner_product(ClassFunction{1, 0, 0},
                                          ClassFunction{1, 0, 0}, data),
                  std::logic_error);
  CHECK_THROWS_AS(inner_product(ClassFunction{1}, chi3, data), std::invalid_argument);
}

TEST_CASE("ctab-v1 serialization") {
  const auto table = build_character_table(3);
  const std::string text = serialize_ctab(table);
  const std::string body =
      "ctab-v1 N=3 count=3\n[3]\n[2,1]\n[1,1,1]\n1 1 1\n-1 0 2\n1 -1 1\n";
  CHECK(text == body + "sha256=" + sha256_hex(body) + "\n");
  CHECK(parse_ctab(text) == table);

  const auto t0 = build_character_table(0);
  CHECK(serialize_ctab(t0).starts_with("ctab-v1 N=0 count=1\n[]\n1\n"));
  CHECK(parse_ctab(serialize_ctab(t0)) == t0);

  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");

  std::string tampered = text;
  tampered[tampered.find("-1 0 2")] = '+';
  CHECK_THROWS_AS(parse_ctab(tampered), CorruptCacheError);
  CHECK_THROWS_AS(parse_ctab(text.substr(0, text.size() - 5)), CorruptCacheError);
  CHECK_THROWS_AS(parse_ctab(""), CorruptCacheError);

  // Well-formed digest over malformed content is still corrupt.
  const std::string bad_body = "ctab-v1 N=3 count=3\n[3]\n[1,1,1]\n[2,1]\n1 1 1\n-1 0 2\n1 -1 1\n";
  CHECK_THROWS_AS(parse_ctab(bad_body + "sha256=" + sha256_hex(bad_body) + "\n"),
                  CorruptCacheError);
}

TEST_CASE("table store uses memory, then disk, then builds") {
  const auto dir = scratch_dir("store");
  {
    TableStore store({dir, 2});
    const auto& t = store.table(6);
    CHECK(store.last_source() == TableStore::Source::built);
    CHECK(&store.table(6) == &t);
    CHECK(store.last_source() == TableStore::Source::memory);
  }
  const auto path = ctab_path(dir, 6);
  REQUIRE(std::filesystem::exists(path));
  const std::string first = slurp(path);
  {
    TableStore store({dir, 1});
    CHECK(store.table(6) == build_character_table(6));
    CHECK(store.last_source() == TableStore::Source::disk);
  }
  CHECK(slurp(path) == first);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    CHECK(entry.path().filename().string().find(".tmp.") == std::string::npos);
  }

  std::string corrupt = first;
  corrupt[corrupt.size() / 2] ^= 1;
  write_file_atomic(path, corrupt);
  TableStore store({dir, 1});
  CHECK_THROWS_AS(store.table(6), CorruptCacheError);
  std::filesystem::remove_all(dir);
}
