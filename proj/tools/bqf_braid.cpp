// bqf_braid: command-line front end for the braid / quadratic form library.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bqf/birman_menasco.hpp"
#include "bqf/braid3.hpp"
#include "bqf/counts.hpp"
#include "bqf/io.hpp"
#include "bqf/quadforms.hpp"

namespace {

using bqf::io::json;

enum class Format { text, json, csv };

constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

void emit(const json& j) { std::cout << bqf::io::dump(j) << "\n"; }

int cmd_h(std::int64_t t, Format fmt) {
  const std::int64_t h = bqf::class_number_h(t);
  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("h");
      j["t"] = t;
      j["h"] = h;
      emit(j);
      break;
    }
    case Format::csv: std::cout << "t,h\n" << t << ',' << h << "\n"; break;
    case Format::text: std::cout << h << "\n"; break;
  }
  return 0;
}

int cmd_forms(std::int64_t t, Format fmt) {
  bqf::require_supported_trace(t);
  const std::int64_t disc = bqf::trace_discriminant(t);
  const auto forms = bqf::reduced_forms(disc);
  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("forms");
      j["t"] = t;
      j["discriminant"] = disc;
      json arr = json::array();
      for (const auto& f : forms) arr.push_back(bqf::io::to_json(f));
      j["forms"] = std::move(arr);
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "a,b,c\n";
      for (const auto& f : forms) std::cout << f.a << ',' << f.b << ',' << f.c << "\n";
      break;
    case Format::text:
      std::cout << "reduced forms of discriminant " << disc << ": " << forms.size() << "\n";
      for (const auto& f : forms) std::cout << "  " << f << "\n";
      break;
  }
  return 0;
}

int cmd_classes(std::int64_t t, Format fmt) {
  const auto classes = bqf::y_classes(t);
  const std::int64_t disc = bqf::trace_discriminant(t);
  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("classes");
      j["t"] = t;
      j["discriminant"] = disc;
      j["h"] = classes.size();
      json arr = json::array();
      for (const auto& c : classes) arr.push_back(bqf::io::to_json(c));
      j["classes"] = std::move(arr);
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "a,b,c,discriminant,residue,cycle_length\n";
      for (const auto& c : classes) {
        std::cout << c.key.repr.a << ',' << c.key.repr.b << ',' << c.key.repr.c << ',' << disc
                  << ',' << c.residue << ',' << c.key.cycle.size() << "\n";
      }
      break;
    case Format::text:
      std::cout << "t = " << t << ", D = " << disc << ", h = " << classes.size() << "\n";
      for (const auto& c : classes) {
        std::cout << "  " << c.key.repr << "  residue " << c.residue << "  matrix "
                  << bqf::ccc_matrix(c.key.repr, t);
        if (!c.key.cycle.empty()) std::cout << "  cycle length " << c.key.cycle.size();
        std::cout << "\n";
      }
      break;
  }
  return 0;
}

bqf::BraidWord word_with_delta(const std::string& text, std::int64_t delta_power) {
  bqf::BraidWord prefix = bqf::garside_power(delta_power < 0 ? -delta_power : delta_power);
  if (delta_power < 0) prefix = prefix.inverse();
  return prefix * bqf::parse_braid(text);
}

int cmd_invariants(const std::string& text, std::int64_t delta_power, Format fmt) {
  const auto inv = bqf::io::compute_invariants(word_with_delta(text, delta_power));
  switch (fmt) {
    case Format::json: emit(bqf::io::to_json(inv)); break;
    case Format::csv:
      std::cout << "exponent_sum,trace,alexander,jones,special_re,special_im\n"
                << inv.exponent_sum << ',' << inv.trace << ",\"" << to_string(inv.alexander)
                << "\",\"" << to_string(inv.jones) << "\"," << inv.special_value.re << ','
                << inv.special_value.im << "\n";
      break;
    case Format::text:
      std::cout << "word          " << to_string(inv.word) << "\n"
                << "exponent sum  " << inv.exponent_sum << "\n"
                << "trace         " << inv.trace << "\n"
                << "phi           " << inv.phi << "\n"
                << "burau trace   " << to_string(inv.burau_trace) << "\n"
                << "alexander     " << to_string(inv.alexander) << "\n"
                << "jones         " << to_string(inv.jones) << "\n"
                << "special value " << inv.special_value << "\n";
      break;
  }
  return 0;
}

int cmd_counts(std::int64_t t, std::int64_t n, Format fmt) {
  const bqf::CountsRow row = bqf::counts_row(t, n);
  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("counts");
      j.update(bqf::io::to_json(row));
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "t,n,x_count,m,p\n"
                << row.t << ',' << row.n << ',' << row.x_count << ',' << row.m << ',' << row.p
                << "\n";
      break;
    case Format::text:
      std::cout << "t=" << row.t << " n=" << row.n << " x=" << row.x_count << " m=" << row.m
                << " p=" << row.p << "\n";
      break;
  }
  return 0;
}

int cmd_m(std::int64_t t, std::int64_t n, Format fmt) {
  const json j = bqf::io::m_document(t, n);
  switch (fmt) {
    case Format::json: emit(j); break;
    case Format::csv:
      std::cout << "t,n,m_prime,m\n" << t << ',' << n << ',' << j["m_prime"] << ',' << j["m"]
                << "\n";
      break;
    case Format::text:
      std::cout << "t=" << t << " n=" << n << " m_prime=" << j["m_prime"] << " m=" << j["m"]
                << "\n";
      for (const auto& w : bqf::bm::witnesses(t, n)) {
        std::cout << "  " << bqf::bm::to_string(w.family);
        for (const auto& word : w.words) std::cout << "  [" << to_string(word) << "]";
        std::cout << "\n";
      }
      break;
  }
  return 0;
}

int cmd_census(std::int64_t t, std::int64_t n, int max_len, Format fmt) {
  const std::int64_t found = bqf::braid_census(t, n, max_len);
  const std::int64_t x = bqf::x_count(t, n);
  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("census");
      j["t"] = t;
      j["n"] = n;
      j["max_len"] = max_len;
      j["census"] = found;
      j["x_count"] = x;
      j["gap"] = x - found;
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << "t,n,max_len,census,x_count\n"
                << t << ',' << n << ',' << max_len << ',' << found << ',' << x << "\n";
      break;
    case Format::text:
      std::cout << "t=" << t << " n=" << n << " words<=" << max_len << ": " << found
                << " classes found, x_count=" << x << "\n";
      break;
  }
  return found <= x ? 0 : kExitFail;
}

int cmd_verify(std::int64_t tmin, std::int64_t tmax, std::optional<std::int64_t> n_override,
               unsigned threads, Format fmt) {
  if (tmin > tmax) throw std::invalid_argument("empty t range: --tmin > --tmax");
  std::vector<std::int64_t> ts;
  std::vector<std::int64_t> skipped;
  for (std::int64_t t = tmin; t <= tmax; ++t) {
    (t == 2 || t == -2 ? skipped : ts).push_back(t);
  }

  // Independent per-t tasks; results land at fixed slots so output order is
  // the sorted t order regardless of scheduling.
  std::vector<bqf::MainReport> reports(ts.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < ts.size(); i = next++) {
      const std::int64_t t = ts[i];
      reports[i] = bqf::verify_main(t, n_override.value_or(bqf::default_sweep_n(t)));
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });

  switch (fmt) {
    case Format::json: {
      json j = bqf::io::document("verify");
      json rows = json::array();
      json windows = json::array();
      for (const auto& rep : reports) {
        for (const auto& line : bqf::io::verify_lines(rep)) rows.push_back(bqf::io::to_json(line));
        windows.push_back(json{{"t", rep.t},
                               {"n", rep.n},
                               {"h_lhs", rep.h_lhs},
                               {"window_rhs", rep.window_rhs},
                               {"pass", rep.pass}});
      }
      j["rows"] = std::move(rows);
      j["windows"] = std::move(windows);
      j["skipped"] = skipped;
      j["all_pass"] = all_pass;
      emit(j);
      break;
    }
    case Format::csv:
      std::cout << bqf::io::kVerifyCsvHeader << "\n";
      for (const auto& rep : reports) {
        for (const auto& line : bqf::io::verify_lines(rep)) std::cout << bqf::io::to_csv(line) << "\n";
      }
      for (const auto t : skipped) std::cout << t << ",,,,,,,skipped\n";
      break;
    case Format::text:
      for (const auto& rep : reports) {
        std::cout << "t=" << rep.t << " n=" << rep.n << " h=" << rep.h_lhs
                  << " window=" << rep.window_rhs << (rep.pass ? " PASS" : " FAIL") << "\n";
      }
      for (const auto t : skipped) std::cout << "t=" << t << " skipped (t = ±2 excluded)\n";
      std::cout << (all_pass ? "all windows pass" : "FAILURES present") << " ("
                << reports.size() << " checked, " << skipped.size() << " skipped)\n";
      break;
  }
  return all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Links of braid index <= 3 and binary quadratic forms of discriminant t^2 - 4"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::int64_t t = 0;
  std::int64_t n = 0;

  auto* h = app.add_subcommand("h", "class number h(t)")->fallthrough();
  h->add_option("t", t, "trace")->required();

  auto* forms = app.add_subcommand("forms", "reduced forms of discriminant t^2 - 4")->fallthrough();
  forms->add_option("t", t, "trace")->required();

  auto* classes =
      app.add_subcommand("classes", "form classes with exponent residues")->fallthrough();
  classes->add_option("t", t, "trace")->required();

  std::string word;
  std::int64_t delta_power = 0;
  auto* invariants =
      app.add_subcommand("invariants", "invariants of a braid word and its closure")->fallthrough();
  invariants->add_option("word", word, "braid word, e.g. \"1 2 -1\" or \"1^3 2\"")->required();
  invariants->add_option("--delta-power", delta_power, "prepend (s1 s2 s1)^k");

  auto* counts = app.add_subcommand("counts", "x_count, M and p for one cell")->fallthrough();
  counts->add_option("t", t, "trace")->required();
  counts->add_option("n", n, "exponent")->required();

  auto* m = app.add_subcommand("m", "exceptional-fiber correction M with witnesses")->fallthrough();
  m->add_option("t", t, "trace")->required();
  m->add_option("n", n, "exponent")->required();

  int max_len = 8;
  auto* census = app.add_subcommand("census", "brute-force class count over braid words")->fallthrough();
  census->add_option("t", t, "trace")->required();
  census->add_option("n", n, "exponent")->required();
  census->add_option("--max-len", max_len, "maximum word length")->check(CLI::Range(1, 20));

  std::int64_t tmin = 3;
  std::int64_t tmax = 50;
  std::optional<std::int64_t> n_override;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "check h(t) = sum_j (p + M) over a t range")->fallthrough();
  verify->add_option("--tmin", tmin, "smallest t");
  verify->add_option("--tmax", tmax, "largest t");
  verify->add_option("--n", n_override, "window start (default -|t-3| - 24)");
  verify->add_option("--threads", threads, "worker threads (0 = hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  const Format fmt = format_name == "json" ? Format::json
                     : format_name == "csv" ? Format::csv
                                            : Format::text;
  try {
    if (*h) return cmd_h(t, fmt);
    if (*forms) return cmd_forms(t, fmt);
    if (*classes) return cmd_classes(t, fmt);
    if (*invariants) return cmd_invariants(word, delta_power, fmt);
    if (*counts) return cmd_counts(t, n, fmt);
    if (*m) return cmd_m(t, n, fmt);
    if (*census) return cmd_census(t, n, max_len, fmt);
    if (*verify) return cmd_verify(tmin, tmax, n_override, threads, fmt);
  } catch (const bqf::NegativeCountError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
