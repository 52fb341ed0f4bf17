#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zariski/zariski.hpp"

namespace zariski::cli {

namespace {

using P = FinPermutation;

const SymOmega kSym{};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PermPair load_pair(const std::string& path) { return codec::decode_pair(codec::parse(read_file(path))); }

PairShape pair_shape(const RunConfig& c) {
  PairShape shape;
  shape.max_rows = c.rows;
  shape.max_degree = c.max_degree;
  shape.support = c.support;
  shape.pool = c.pool;
  return shape;
}

// Evaluation points mix small and full supports so that fixed-point-heavy
// permutations are sampled too.
P sample_point(Rng& rng, Point support) { return random_permutation(rng, 1 + rng.below(support)); }

bool lex_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool step_decreases(const RewriteStep& s) {
  switch (s.kind) {
    case RewriteKind::Adjust:
      return s.signature_after == s.signature_before && s.violations_after < s.violations_before;
    case RewriteKind::Contradiction: return true;
    default: return lex_less(s.signature_after, s.signature_before);
  }
}

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

std::string error_name(const std::exception& e) {
#define ZARISKI_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  ZARISKI_NAME(InvalidPermutation)
  ZARISKI_NAME(NotInjective)
  ZARISKI_NAME(InvalidWord)
  ZARISKI_NAME(IrreducibleSignature)
  ZARISKI_NAME(IndexOutOfRange)
  ZARISKI_NAME(InvalidMatrix)
  ZARISKI_NAME(InvalidAdjuster)
  ZARISKI_NAME(NotNormalized)
  ZARISKI_NAME(OracleExhausted)
  ZARISKI_NAME(InvalidPair)
  ZARISKI_NAME(FixedPoint)
  ZARISKI_NAME(UnknownGroup)
  ZARISKI_NAME(InvalidGroupTable)
  ZARISKI_NAME(TooLarge)
  ZARISKI_NAME(CarrierMismatch)
  ZARISKI_NAME(ParseError)
  ZARISKI_NAME(EmptyInput)
  ZARISKI_NAME(InvalidArgument)
#undef ZARISKI_NAME
  return "Error";
}

void require_positive(const RunConfig& c) {
  if (c.cases == 0 || c.rows == 0 || c.support == 0 || c.bound_n == 0 || c.samples == 0) {
    throw InvalidArgument("bounds must be positive");
  }
}

// ---- normalize ------------------------------------------------------------

void normalize_case(Report& report, Rng& rng, const RunConfig& c, std::size_t index,
                    const PermPair& raw) {
  const auto traced = normalize_traced(raw, kSym, default_adjuster());
  const auto& nf = traced.result;

  bool conditions = true;
  if (nf.kind == NormalFormKind::Proper) conditions = satisfies_basis_conditions(*nf.pair);
  bool measure = true;
  json steps = json::array();
  for (const RewriteStep& s : traced.steps) {
    measure = measure && step_decreases(s);
    steps.push_back(codec::encode(s));
  }
  std::size_t agree = 0;
  for (std::size_t k = 0; k < c.samples; ++k) {
    const P x = sample_point(rng, c.support);
    if (membership(raw, x, kSym) == membership(nf, x, kSym)) ++agree;
  }
  const bool ok = conditions && measure && agree == c.samples;

  json rec = {{"index", index},
              {"input", codec::encode(raw)},
              {"normal_form", codec::encode(nf)},
              {"steps", std::move(steps)},
              {"conditions", conditions},
              {"measure_decreasing", measure},
              {"agreement", {{"agree", agree}, {"samples", c.samples}}}};
  std::ostringstream line;
  line << "#" << index << " " << to_string(nf.kind) << " steps=" << traced.steps.size()
       << " conditions=" << pass_word(conditions) << " measure=" << pass_word(measure)
       << " agreement=" << agree << "/" << c.samples << " " << pass_word(ok);
  report.add_case(std::move(rec), ok, line.str());
}

// ---- witness / intersect --------------------------------------------------

// Normalizes every input, builds one witness for the intersection of the
// basic sets and checks it against the raw inputs.
void witness_case(Report& report, std::size_t index, const std::vector<PermPair>& raws) {
  std::vector<PermPair> proper;
  json forms = json::array();
  for (std::size_t i = 0; i < raws.size(); ++i) {
    auto nf = normalize(raws[i], kSym, default_adjuster());
    forms.push_back(codec::encode(nf));
    if (nf.kind == NormalFormKind::Empty) {
      throw EmptyInput("input " + std::to_string(i) + " normalizes to the empty set");
    }
    if (nf.kind == NormalFormKind::Proper) proper.push_back(std::move(*nf.pair));
  }

  P element;
  json trace = nullptr;
  std::size_t steps = 0;
  std::size_t bound = 0;
  if (!proper.empty()) {
    PermPair target = proper.front();
    for (std::size_t i = 1; i < proper.size(); ++i) target = stack(target, proper[i]);
    bound = target.total_degree();
    auto result = construct_witness(target, symw_oracle());
    element = result.element;
    steps = result.trace.steps.size();
    trace = codec::encode(result.trace);
  }

  bool member = true;
  for (const PermPair& raw : raws) member = member && membership(raw, element, kSym);
  const bool within = steps <= bound;
  const bool ok = member && within;

  json rec = {{"index", index},     {"normal_forms", std::move(forms)},
              {"witness", codec::encode(element)}, {"trace", std::move(trace)},
              {"steps", steps},     {"step_bound", bound},
              {"membership", member}};
  std::ostringstream line;
  line << "#" << index << " witness=" << to_string(element) << " steps=" << steps << "/" << bound
       << " membership=" << pass_word(member) << " " << pass_word(ok);
  report.add_case(std::move(rec), ok, line.str());
}

// ---- separate -------------------------------------------------------------

json solutions_json(const std::vector<Generator>& s) { return json(s); }

json bound_json(const CandidateBound& b) {
  if (b.all_even) return "AllEven";
  return json(b.candidates);
}

void separate_case(Report& report, std::size_t index, const GElement& a, std::uint64_t p,
                   std::uint64_t m, const RunConfig& c) {
  const auto closed = solve_on_tm(a, p, m, c.bound_n);
  const auto brute = solve_on_tm_by_enumeration(a, p, m, c.bound_n);
  const auto bound = finiteness_bound(a, p, m);
  bool contained = true;
  for (Generator n : closed) contained = contained && bound.admits(n);
  const bool agree = closed == brute;
  // Below the torsion exponent the bound must be finite.
  const bool finite_ok = p % m == 0 || !bound.all_even;
  bool torsion_ok = true;
  const bool torsion_row = p == m && a.is_identity();
  if (torsion_row) {
    std::vector<Generator> evens;
    for (Generator n = 0; n <= c.bound_n; n += 2) evens.push_back(n);
    torsion_ok = bound.all_even && closed == evens;
  }
  const bool ok = contained && agree && finite_ok && torsion_ok;

  json rec = {{"index", index},
              {"m", m},
              {"p", p},
              {"a", codec::encode(a)},
              {"solutions", bound.all_even && closed.size() > 8 ? json("AllEven")
                                                                : solutions_json(closed)},
              {"solution_count", closed.size()},
              {"bound", bound_json(bound)},
              {"bound_check", contained && finite_ok},
              {"enumeration_agrees", agree}};
  std::ostringstream line;
  std::ostringstream as;
  as << a;
  line << "m=" << m << " p=" << p << " a=" << as.str() << " solutions=";
  if (bound.all_even) {
    line << "AllEven";
    if (torsion_row) {
      line << " {";
      for (std::size_t i = 0; i < closed.size() && i < 4; ++i) line << (i ? "," : "") << closed[i];
      line << ",...}";
    }
  } else if (closed.empty()) {
    line << "{}";
  } else {
    line << "{";
    for (std::size_t i = 0; i < closed.size(); ++i) line << (i ? "," : "") << closed[i];
    line << "}";
  }
  line << " bound=" << pass_word(contained && finite_ok) << " enum=" << pass_word(agree) << " "
       << pass_word(ok);
  report.add_case(std::move(rec), ok, line.str());
}

// ---- finite-check ---------------------------------------------------------

json family_json(const SetFamily& f) { return {{"size", f.size()}}; }

}  // namespace

json RunConfig::to_json() const {
  return {{"seed", seed},       {"cases", cases},        {"rows", rows},
          {"max_degree", max_degree}, {"support", support}, {"pool", pool},
          {"bound_n", bound_n}, {"samples", samples},    {"m_min", m_min},
          {"m_max", m_max},     {"group", group},        {"inputs", inputs}};
}

Report::Report(std::string command, const RunConfig& config)
    : command_(std::move(command)), config_(config.to_json()), timing_(config.timing) {}

void Report::add_case(json record, bool passed, std::string line) {
  record["passed"] = passed;
  cases_.push_back(std::move(record));
  lines_.push_back(std::move(line));
  if (passed) ++passed_;
}

void Report::set_error(std::string type, std::string message) {
  error_ = std::make_pair(std::move(type), std::move(message));
}

json Report::to_json() const {
  json j = {{"command", command_},
            {"config", config_},
            {"cases", cases_},
            {"summary", {{"cases", cases_.size()}, {"passed", passed_}, {"failed", failed()}}}};
  if (error_) j["error"] = {{"type", error_->first}, {"message", error_->second}};
  if (timing_) j["wall_time_ms"] = wall_time_ms_;
  return j;
}

std::string Report::render(Format format) const {
  if (format == Format::Json) return to_json().dump(2) + "\n";
  std::ostringstream out;
  out << command_ << " (seed " << config_["seed"].get<std::uint64_t>() << ")\n";
  for (const auto& l : lines_) out << "  " << l << "\n";
  if (error_) out << "error: " << error_->first << ": " << error_->second << "\n";
  out << "passed " << passed_ << "/" << cases_.size();
  if (timing_) out << " in " << wall_time_ms_ << " ms";
  out << "\n";
  return out.str();
}

Report cmd_normalize(const RunConfig& c) {
  require_positive(c);
  Report report("normalize", c);
  Rng rng(c.seed);
  if (!c.inputs.empty()) {
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
      normalize_case(report, rng, c, i, load_pair(c.inputs[i]));
    }
    return report;
  }
  for (std::size_t i = 0; i < c.cases; ++i) {
    const PermPair raw = random_pair(rng, pair_shape(c));
    normalize_case(report, rng, c, i, raw);
  }
  return report;
}

Report cmd_witness(const RunConfig& c) {
  require_positive(c);
  Report report("witness", c);
  if (!c.inputs.empty()) {
    if (c.inputs.size() > 2) throw InvalidArgument("witness takes one or two input files");
    std::vector<PermPair> raws;
    for (const auto& path : c.inputs) raws.push_back(load_pair(path));
    witness_case(report, 0, raws);
    return report;
  }
  Rng rng(c.seed);
  for (std::size_t i = 0; i < c.cases; ++i) {
    witness_case(report, i, {random_proper_pair(rng, pair_shape(c), default_adjuster()).first});
  }
  return report;
}

Report cmd_intersect(const RunConfig& c) {
  require_positive(c);
  Report report("intersect", c);
  if (!c.inputs.empty()) {
    if (c.inputs.size() != 2) throw InvalidArgument("intersect takes two input files");
    witness_case(report, 0, {load_pair(c.inputs[0]), load_pair(c.inputs[1])});
    return report;
  }
  Rng rng(c.seed);
  for (std::size_t i = 0; i < c.cases; ++i) {
    auto first = random_proper_pair(rng, pair_shape(c), default_adjuster()).first;
    auto second = random_proper_pair(rng, pair_shape(c), default_adjuster()).first;
    witness_case(report, i, {std::move(first), std::move(second)});
  }
  return report;
}

Report cmd_separate(const RunConfig& c) {
  require_positive(c);
  if (c.m_min < 2 || c.m_max < c.m_min) throw InvalidArgument("need 2 <= m-min <= m-max");
  Report report("separate", c);
  Rng rng(c.seed);
  const GElementShape shape;
  std::size_t index = 0;
  for (std::uint64_t m = c.m_min; m <= c.m_max; ++m) {
    separate_case(report, index++, GElement{}, m, m, c);
    for (std::uint64_t p = 1; p < m; ++p) {
      separate_case(report, index++, GElement{}, p, m, c);
      for (std::size_t i = 0; i < c.cases; ++i) {
        // A third of the draws are shaped to have a solution on T_m.
        GElement a;
        const Generator n = rng.below(shape.max_generator + 1);
        switch (rng.below(3)) {
          case 0: a = random_gelement(rng, shape); break;
          case 1: a = GElement::tm_point(m, n).pow(-static_cast<std::int64_t>(p)); break;
          default:
            a = GElement::tm_point(m, n).pow(-static_cast<std::int64_t>(p)) *
                random_gelement(rng, shape);
        }
        separate_case(report, index++, a, p, m, c);
      }
    }
  }
  return report;
}

Report cmd_symcheck(const RunConfig& c) {
  require_positive(c);
  Report report("symcheck", c);
  std::size_t index = 0;
  std::vector<Point> perm{0, 1, 2, 3, 4};
  do {
    std::vector<PointPair> pairs;
    for (Point i = 0; i < 5; ++i) pairs.emplace_back(i, perm[i]);
    const P f = P::from_pairs(pairs);
    for (Point x = 0; x < 5; ++x) {
      for (Point y = x + 1; y < 5; ++y) {
        const bool lhs = stab_by_commutation(f, x, y);
        const bool rhs = stabilizes_pair(f, x, y);
        const bool ok = lhs == rhs;
        std::ostringstream line;
        line << "commute f=" << to_string(f) << " {" << x << "," << y << "} " << pass_word(ok);
        report.add_case({{"index", index++},
                         {"kind", "commutation"},
                         {"f", codec::encode(f)},
                         {"x", x},
                         {"y", y},
                         {"commutes", lhs},
                         {"stabilizes", rhs}},
                        ok, line.str());
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rng rng(c.seed);
  for (std::size_t i = 0; i < c.cases; ++i) {
    // f and g must both move x: draw until they do.
    P f, g;
    Point x = 0;
    do {
      f = random_permutation(rng, c.support);
      g = random_permutation(rng, c.support);
      x = rng.below(c.support);
    } while (f.apply(x) == x || g.apply(x) == x);
    const auto [phi, h] = maximal_decompose(f, g, x);
    const bool fixes = phi.apply(x) == x && h.apply(x) == x;
    const bool exact = compose(compose(phi, f), invert(h)) == g;
    const bool ok = fixes && exact;
    std::ostringstream line;
    line << "decompose x=" << x << " f=" << to_string(f) << " g=" << to_string(g)
         << " phi=" << to_string(phi) << " h=" << to_string(h) << " " << pass_word(ok);
    report.add_case({{"index", index++},
                     {"kind", "decomposition"},
                     {"f", codec::encode(f)},
                     {"g", codec::encode(g)},
                     {"x", x},
                     {"phi", codec::encode(phi)},
                     {"h", codec::encode(h)},
                     {"fixes_x", fixes},
                     {"exact", exact}},
                    ok, line.str());
  }
  return report;
}

Report cmd_finite_check(const RunConfig& c) {
  Report report("finite-check", c);
  const FiniteGroupTable g = builtin(c.group);
  const auto d_max = static_cast<std::uint32_t>(c.max_degree);

  std::vector<SetFamily> semi;
  std::vector<SetFamily> grp;
  for (std::uint32_t d = 0; d <= d_max; ++d) {
    semi.push_back(semigroup_family(g, d));
    grp.push_back(group_family(g, d));
  }

  std::size_t index = 0;
  for (std::uint32_t d = 0; d <= d_max; ++d) {
    const auto ts = FiniteTopology::generated_by(semi[d]);
    const auto tg = FiniteTopology::generated_by(grp[d]);
    const bool included = ts.coarser_than(tg);
    const bool equal = ts == tg;
    const bool ok = g.is_abelian() ? equal : included;
    std::ostringstream line;
    line << g.name() << " d=" << d << " semigroup=" << semi[d].size() << " group=" << grp[d].size()
         << " closed " << (equal ? "equal" : included ? "semigroup<=group" : "not included") << " "
         << pass_word(ok);
    report.add_case({{"index", index++},
                     {"kind", "families"},
                     {"degree", d},
                     {"semigroup", family_json(semi[d])},
                     {"group", family_json(grp[d])},
                     {"abelian", g.is_abelian()},
                     {"closed_semigroup_in_group", included},
                     {"closed_equal", equal}},
                    ok, line.str());
  }
  for (std::uint32_t d = 0; d < d_max; ++d) {
    const bool s_ok = family_subset(semi[d], semi[d + 1]);
    const bool g_ok = family_subset(grp[d], grp[d + 1]);
    std::ostringstream line;
    line << g.name() << " monotone d=" << d << "->" << d + 1 << " " << pass_word(s_ok && g_ok);
    report.add_case({{"index", index++},
                     {"kind", "monotonicity"},
                     {"degree", d},
                     {"semigroup", s_ok},
                     {"group", g_ok}},
                    s_ok && g_ok, line.str());
  }
  const std::uint32_t d_red = std::min<std::uint32_t>(d_max, 3);
  const auto mismatches = check_reduction(g, d_red);
  json mm = json::array();
  for (const auto& m : mismatches) {
    mm.push_back({{"coefficients", m.coefficients},
                  {"signs", m.signs},
                  {"direct", m.direct},
                  {"reduced", m.reduced}});
  }
  std::ostringstream line;
  line << g.name() << " reduction d<=" << d_red << " words=" << reduction_word_count(g, d_red)
       << " mismatches=" << mismatches.size() << " " << pass_word(mismatches.empty());
  report.add_case({{"index", index++},
                   {"kind", "reduction"},
                   {"degree", d_red},
                   {"words", reduction_word_count(g, d_red)},
                   {"mismatches", std::move(mm)}},
                  mismatches.empty(), line.str());
  return report;
}

Report run_command(const std::string& name, const RunConfig& config) {
  using Fn = Report (*)(const RunConfig&);
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"normalize", cmd_normalize}, {"witness", cmd_witness},   {"intersect", cmd_intersect},
      {"separate", cmd_separate},   {"symcheck", cmd_symcheck}, {"finite-check", cmd_finite_check}};
  Fn fn = nullptr;
  for (const auto& [n, f] : table) {
    if (n == name) fn = f;
  }
  if (!fn) throw std::invalid_argument("unknown command: " + name);

  const auto start = std::chrono::steady_clock::now();
  Report report(name, config);
  try {
    report = fn(config);
  } catch (const Error& e) {
    report.set_error(error_name(e), e.what());
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  report.set_wall_time_ms(elapsed.count());
  return report;
}

std::vector<std::string> command_names() {
  return {"normalize", "witness", "intersect", "separate", "symcheck", "finite-check"};
}

int exit_code(const Report& report) {
  if (report.has_error()) return 2;
  return report.failed() == 0 ? 0 : 1;
}

}  // namespace zariski::cli
