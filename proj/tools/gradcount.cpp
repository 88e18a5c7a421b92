// Command-line front end: exact grading counts, count tables, formula-vs-
// oracle verification, and group identification from count sequences.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain error, 4 bad
// or inconsistent input data.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gradcount/gradcount.hpp"

namespace {

using gradcount::BlockShape;
using gradcount::GroupSpec;
using gradcount::Int;

std::vector<std::uint64_t> parse_blocks(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw gradcount::parse_error("bad block size '" + tok + "' in --blocks");
    out.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

GroupSpec resolve_group(const std::string& group, const std::string& cayley) {
  if (!group.empty() && !cayley.empty())
    throw gradcount::parse_error("--group and --cayley are mutually exclusive");
  if (!group.empty()) return GroupSpec(gradcount::make_abelian(group));
  if (!cayley.empty()) return GroupSpec(gradcount::load_cayley_file(cayley));
  throw gradcount::parse_error("one of --group or --cayley is required");
}

std::uint64_t enum_cap_from_env() {
  const char* v = std::getenv("GRADCOUNT_ENUM_CAP");
  if (v == nullptr || *v == '\0') return gradcount::kDefaultEnumCap;
  std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw gradcount::parse_error("GRADCOUNT_ENUM_CAP must be a decimal integer");
  return std::stoull(s);
}

Int count_of_kind(const std::string& kind, const GroupSpec& g, const BlockShape& shape) {
  if (kind == "e") return gradcount::count_elementary(g, shape);
  if (!g.is_abelian_type())
    throw gradcount::domain_error(
        "counting all gradings requires an abelian group given by invariants");
  return gradcount::count_all(g.abelian(), shape);
}

int cmd_count(const std::string& kind, const std::string& group, const std::string& cayley,
              std::optional<std::uint64_t> m, const std::string& blocks) {
  if (m.has_value() == !blocks.empty())
    throw gradcount::parse_error("exactly one of --m or --blocks is required");
  GroupSpec g = resolve_group(group, cayley);
  BlockShape shape = m ? BlockShape{*m} : BlockShape(parse_blocks(blocks));
  std::cout << count_of_kind(kind, g, shape).str() << "\n";
  return 0;
}

int cmd_table(const std::string& group, const std::string& cayley, std::uint64_t max_m,
              const std::string& kind, const std::string& format) {
  GroupSpec g = resolve_group(group, cayley);
  const bool want_e = kind == "e" || kind == "both";
  const bool want_n = kind == "n" || kind == "both";
  if (want_n && !g.is_abelian_type())
    throw gradcount::domain_error(
        "counting all gradings requires an abelian group given by invariants");

  std::vector<std::pair<Int, Int>> rows;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    Int e = want_e ? gradcount::count_elementary_matrix(g, m) : Int(0);
    Int n = want_n ? gradcount::count_all_matrix(g.abelian(), m) : Int(0);
    rows.emplace_back(std::move(e), std::move(n));
  }

  if (format == "csv") {
    if (kind == "both")
      std::cout << "m,e,n\n";
    else
      std::cout << "m,count\n";
    for (std::uint64_t m = 1; m <= max_m; ++m) {
      const auto& [e, n] = rows[m - 1];
      if (kind == "both")
        std::cout << m << ',' << e.str() << ',' << n.str() << "\n";
      else
        std::cout << m << ',' << (kind == "e" ? e : n).str() << "\n";
    }
    return 0;
  }

  nlohmann::ordered_json doc;
  doc["group"] = g.describe();
  doc["kind"] = kind;
  doc["rows"] = nlohmann::ordered_json::array();
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const auto& [e, n] = rows[m - 1];
    nlohmann::ordered_json row;
    row["m"] = m;
    if (kind == "both") {
      row["e"] = e.str();
      row["n"] = n.str();
    } else {
      row["count"] = (kind == "e" ? e : n).str();
    }
    doc["rows"].push_back(std::move(row));
  }
  std::cout << doc.dump(2) << "\n";
  return 0;
}

void shapes_with_total_at_most(std::uint64_t size_cap, std::vector<BlockShape>& out) {
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t rest) -> void {
    if (!cur.empty()) out.push_back(BlockShape(cur));
    for (std::uint64_t next = 1; next <= rest; ++next) {
      cur.push_back(next);
      self(self, rest - next);
      cur.pop_back();
    }
  };
  rec(rec, size_cap);
}

int cmd_verify(std::uint64_t max_order, std::uint64_t max_size) {
  std::uint64_t cap = enum_cap_from_env();
  std::vector<BlockShape> shapes;
  shapes_with_total_at_most(max_size, shapes);
  std::sort(shapes.begin(), shapes.end());

  std::size_t cells = 0, failures = 0;
  for (std::uint64_t order = 1; order <= max_order; ++order) {
    for (const auto& type : gradcount::abelian_types_of_order(order)) {
      GroupSpec g(type);
      for (const auto& shape : shapes) {
        Int formula = gradcount::count_elementary(g, shape);
        Int parts = gradcount::count_orbits(g, shape, gradcount::OrbitMethod::partition, cap);
        Int burns = gradcount::count_orbits(g, shape, gradcount::OrbitMethod::burnside, cap);
        bool ok = formula == parts && formula == burns;
        ++cells;
        if (!ok) ++failures;
        std::cout << type.to_string() << " " << shape.to_string() << " formula=" << formula.str()
                  << " partition=" << parts.str() << " burnside=" << burns.str()
                  << (ok ? " ok" : " MISMATCH") << "\n";
      }
    }
  }
  std::cout << "verify: " << cells << " cells, " << failures << " mismatches\n";
  return failures == 0 ? 0 : 1;
}

int cmd_identify(const std::string& sequence_path, std::optional<std::uint64_t> order) {
  std::ifstream in(sequence_path);
  if (!in) throw gradcount::data_error("cannot open sequence file '" + sequence_path + "'");
  gradcount::CountSequence seq = gradcount::read_count_sequence(in);
  seq.claimed_order = order;
  gradcount::OrderProfile prof = gradcount::profile_from_sequence(seq);
  auto cls = gradcount::identify_from_profile(prof);
  if (auto* t = std::get_if<gradcount::AbelianGroupType>(&cls))
    std::cout << t->to_string() << "\n";
  else
    std::cout << "non-abelian: " << std::get<gradcount::NonAbelianCertificate>(cls).reason << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of grading isomorphism classes on matrix and upper "
               "block-triangular matrix algebras"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "print one exact count");
  std::string count_kind;
  count->add_option("kind", count_kind, "e (elementary) or n (all gradings)")
      ->required()
      ->check(CLI::IsMember({"e", "n"}));
  std::string count_group, count_cayley, count_blocks;
  count->add_option("--group", count_group, "abelian group, grammar Z{n}(xZ{n})*");
  count->add_option("--cayley", count_cayley, "JSON Cayley table file");
  std::uint64_t count_m = 0;
  auto* count_m_opt = count->add_option("--m", count_m, "matrix size m");
  count->add_option("--blocks", count_blocks, "block sizes m1,m2,...");

  auto* table = app.add_subcommand("table", "emit counts for m = 1..M");
  std::string table_group, table_cayley, table_kind = "e", table_format = "csv";
  std::uint64_t table_max_m = 0;
  table->add_option("--group", table_group, "abelian group, grammar Z{n}(xZ{n})*");
  table->add_option("--cayley", table_cayley, "JSON Cayley table file");
  table->add_option("--max-m", table_max_m, "largest matrix size")->required()->check(CLI::PositiveNumber);
  table->add_option("--kind", table_kind)->check(CLI::IsMember({"e", "n", "both"}));
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "formula vs brute-force oracle");
  std::uint64_t verify_max_order = 8, verify_max_size = 6;
  verify->add_option("--max-order", verify_max_order, "largest abelian group order");
  verify->add_option("--max-size", verify_max_size, "largest total block size");

  auto* identify = app.add_subcommand("identify", "recover a group from its E-sequence");
  std::string identify_sequence;
  identify->add_option("--sequence", identify_sequence, "CSV file with header m,count")->required();
  std::uint64_t identify_order = 0;
  auto* identify_order_opt = identify->add_option("--order", identify_order, "claimed group order");

  try {
    app.parse(argc, argv);
    if (count->parsed())
      return cmd_count(count_kind, count_group, count_cayley,
                       count_m_opt->count() ? std::optional<std::uint64_t>(count_m) : std::nullopt,
                       count_blocks);
    if (table->parsed())
      return cmd_table(table_group, table_cayley, table_max_m, table_kind, table_format);
    if (verify->parsed()) return cmd_verify(verify_max_order, verify_max_size);
    if (identify->parsed())
      return cmd_identify(identify_sequence, identify_order_opt->count()
                                                 ? std::optional<std::uint64_t>(identify_order)
                                                 : std::nullopt);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const gradcount::parse_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gradcount::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const gradcount::data_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return 1;
  }
}
