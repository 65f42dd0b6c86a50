#include "paradromic/cli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "paradromic/colorings.hpp"
#include "paradromic/errors.hpp"
#include "paradromic/link_relations.hpp"
#include "paradromic/verify.hpp"

namespace paradromic::cli {

namespace {

/// Bad arguments that CLI11 cannot see (non-prime modulus, even n, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string& text) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty())
    throw UsageError("not a nonnegative integer: '" + text + "'");
  return value;
}

Prime parse_prime(std::uint64_t p) {
  if (!is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
  return Prime(p);
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> primes;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) primes.push_back(parse_prime(parse_count(item)).value());
  if (primes.empty()) throw UsageError("empty prime list");
  return primes;
}

void require_positive_n(std::size_t n) {
  if (n == 0) throw UsageError("--n must be at least 1");
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

void print_records(std::ostream& out, const std::vector<OutputRecord>& records,
                   const std::string& format) {
  if (format == "csv") {
    out << kCsvHeader << '\n';
    for (const auto& r : records) out << to_csv_row(r) << '\n';
  } else if (format == "json") {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
  } else {
    for (const auto& r : records) out << to_text_line(r) << '\n';
  }
}

struct Options {
  std::size_t m = 0;
  std::size_t n = 1;
  std::uint64_t p = 2;
  std::string format = "text";
  std::string m_range;
  std::string n_range;
  std::size_t max_m = 8;
  std::size_t max_n = 7;
  std::string primes = "2,3,5,7";
  std::uint64_t budget = 0;
  std::vector<std::size_t> torus;
  std::vector<std::size_t> paradrome;
};

int cmd_classify(const Options& o, std::ostream& out) {
  require_positive_n(o.n);
  const std::size_t limit = o.budget ? o.budget : kDefaultCoreArcLimit;
  print_records(out, {make_record(classify(o.m, o.n, limit))}, o.format);
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const Range ms = parse_range(o.m_range);
  const Range ns = parse_range(o.n_range);
  if (ns.lo == 0) throw UsageError("--n range must start at 1 or more");
  const std::size_t cells = (ms.hi - ms.lo + 1) * (ns.hi - ns.lo + 1);
  if ((ms.hi - ms.lo + 1) > kMaxTableCells || (ns.hi - ns.lo + 1) > kMaxTableCells ||
      cells > kMaxTableCells)
    throw UsageError("table has more than " + std::to_string(kMaxTableCells) + " cells");
  const std::size_t limit = o.budget ? o.budget : kDefaultCoreArcLimit;
  std::vector<OutputRecord> records;
  records.reserve(cells);
  for (std::size_t n = ns.lo; n <= ns.hi; ++n)
    for (std::size_t m = ms.lo; m <= ms.hi; ++m) records.push_back(make_record(classify(m, n, limit)));
  print_records(out, records, o.format);
  return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out) {
  require_positive_n(o.n);
  const Prime p = parse_prime(o.p);
  const RelationSystem sys = paradrome_relations(o.m, o.n);
  const auto coloring = find_coloring(sys, p);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["p"] = p.value();
    if (coloring)
      j["coloring"] = {{"arcs", coloring->arcs}, {"circles", coloring->circles}};
    else
      j["coloring"] = nullptr;
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (!coloring) {
    out << "none\n";
    return kExitOk;
  }
  for (std::size_t a = 0; a < coloring->arcs.size(); ++a)
    out << "arc " << a << ": " << coloring->arcs[a] << '\n';
  for (std::size_t c = 0; c < coloring->circles.size(); ++c)
    out << "circle " << c << ": " << coloring->circles[c] << '\n';
  return kExitOk;
}

int cmd_charpoly(const Options& o, std::ostream& out, const Hooks& hooks) {
  if (o.n < 3 || o.n % 2 == 0) throw UsageError("--n must be odd and at least 3");
  const IntMatrix s = hooks.transfer_s ? hooks.transfer_s(o.n) : transfer_S(o.n);
  const IntPoly computed = char_poly(s);
  const IntPoly closed = lemma1_charpoly(o.n);
  out << "charpoly " << computed.to_string() << '\n';
  out << "closed   " << closed.to_string() << '\n';
  const bool match = computed == closed;
  out << (match ? "MATCH" : "MISMATCH") << '\n';
  return match ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out, const Hooks& hooks) {
  VerifyOptions vo;
  vo.max_m = o.max_m;
  vo.max_n = o.max_n;
  if (vo.max_n == 0) throw UsageError("--max-n must be at least 1");
  if ((vo.max_m + 1) * vo.max_n > kMaxTableCells) throw UsageError("verification grid too large");
  vo.primes = parse_primes(o.primes);
  if (o.budget) vo.enumeration_budget = o.budget;
  vo.transfer_s = hooks.transfer_s;

  std::size_t failures = 0;
  for (const CheckResult& r : run_verification(vo)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) {
      out << ": " << r.detail;
      ++failures;
    }
    out << '\n';
  }
  if (failures) {
    out << failures << " check(s) failed\n";
    return kExitCheckFailed;
  }
  out << "all checks passed\n";
  return kExitOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  require_positive_n(o.n);
  write_relations(out, paradrome_relations(o.m, o.n));
  return kExitOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  if (o.torus.empty() == o.paradrome.empty())
    throw UsageError("det needs exactly one of --torus U V or --paradrome M N");
  if (!o.torus.empty()) {
    if (o.torus[1] == 0) throw UsageError("torus v must be at least 1");
    out << torus_det(o.torus[0], o.torus[1]) << '\n';
  } else {
    require_positive_n(o.paradrome[1]);
    out << link_determinant(paradrome_relations(o.paradrome[0], o.paradrome[1])) << '\n';
  }
  return kExitOk;
}

}  // namespace

OutputRecord make_record(const Classification& c) {
  return OutputRecord{c.spec.m,
                      c.spec.n,
                      c.type.label(),
                      c.type.components(),
                      c.color.name(),
                      c.color.modulus(),
                      c.determinant.to_string()};
}

nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["type"] = r.type;
  j["components"] = r.components;
  j["class"] = r.cls;
  if (r.modulus) j["modulus"] = *r.modulus;
  j["determinant"] = r.determinant;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.m = j.at("m").get<std::size_t>();
  r.n = j.at("n").get<std::size_t>();
  r.type = j.at("type").get<std::string>();
  r.components = j.at("components").get<std::size_t>();
  r.cls = j.at("class").get<std::string>();
  if (j.contains("modulus")) r.modulus = j.at("modulus").get<std::uint64_t>();
  r.determinant = j.at("determinant").get<std::string>();
  return r;
}

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << r.m << ',' << r.n << ',' << csv_quote(r.type) << ',' << r.components << ',' << r.cls << ',';
  if (r.modulus) os << *r.modulus;
  os << ',' << r.determinant;
  return os.str();
}

std::string to_text_line(const OutputRecord& r) {
  std::ostringstream os;
  os << "P(" << r.m << ',' << r.n << ") type=" << r.type << " components=" << r.components
     << " class=" << r.cls;
  if (r.modulus) os << " modulus=" << *r.modulus;
  os << " determinant=" << r.determinant;
  return os.str();
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_count(text);
  } else {
    r.lo = parse_count(text.substr(0, dots));
    r.hi = parse_count(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range: '" + text + "'");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Colorability of paradromic rings and torus links", "paradromic"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto* classify_cmd = app.add_subcommand("classify", "Classify P(m,n) by colorability");
  classify_cmd->add_option("--m", o.m, "Half twists")->required();
  classify_cmd->add_option("--n", o.n, "Sections")->required();
  classify_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  classify_cmd->add_option("--budget", o.budget,
                           "Largest diagram (arcs) for an exact core-link determinant");

  auto* table_cmd = app.add_subcommand("table", "Classify a rectangle of P(m,n)");
  table_cmd->add_option("--m", o.m_range, "Range a..b")->required();
  table_cmd->add_option("--n", o.n_range, "Range a..b")->required();
  table_cmd->add_option("--format", o.format)->check(CLI::IsMember(formats));
  table_cmd->add_option("--budget", o.budget,
                        "Largest diagram (arcs) for an exact core-link determinant");

  auto* color_cmd = app.add_subcommand("color", "Print a non-constant p-coloring of P(m,n)");
  color_cmd->add_option("--m", o.m)->required();
  color_cmd->add_option("--n", o.n)->required();
  color_cmd->add_option("--p", o.p)->required();
  color_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of S_n");
  charpoly_cmd->add_option("--n", o.n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check");
  verify_cmd->add_option("--max-m", o.max_m);
  verify_cmd->add_option("--max-n", o.max_n);
  verify_cmd->add_option("--primes", o.primes, "Comma-separated primes");
  verify_cmd->add_option("--budget", o.budget, "Enumeration budget (assignments)");

  auto* relations_cmd = app.add_subcommand("relations", "Dump the crossing relations of P(m,n)");
  relations_cmd->add_option("--m", o.m)->required();
  relations_cmd->add_option("--n", o.n)->required();

  auto* det_cmd = app.add_subcommand("det", "Link determinant");
  det_cmd->add_option("--torus", o.torus, "U V")->expected(2);
  det_cmd->add_option("--paradrome", o.paradrome, "M N")->expected(2);

  std::vector<const char*> argv{"paradromic"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*table_cmd) return cmd_table(o, out);
    if (*color_cmd) return cmd_color(o, out);
    if (*charpoly_cmd) return cmd_charpoly(o, out, hooks);
    if (*verify_cmd) return cmd_verify(o, out, hooks);
    if (*relations_cmd) return cmd_relations(o, out);
    if (*det_cmd) return cmd_det(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace paradromic::cli
