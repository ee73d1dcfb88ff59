#pragma once

// Command-line driver.  run() takes the arguments after the program name and
// writes to the given streams, so tests can drive it directly.
//
// Exit codes: verdict 0 Formal / 10 NotFormal / 20 Inconclusive; other
// subcommands 0 on success.  Errors: 64 usage, 65 bad data, 66 missing
// input, 70 internal consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sullivan/attachment.hpp"
#include "sullivan/errors.hpp"
#include "sullivan/even_complex.hpp"
#include "sullivan/fixtures.hpp"
#include "sullivan/formality.hpp"
#include "sullivan/job.hpp"
#include "sullivan/minimal_model.hpp"
#include "sullivan/report.hpp"

namespace sullivan::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 64,
  kData = 65,
  kNoInput = 66,
  kInternal = 70,
};

struct Options {
  std::string command;
  std::string input;
  std::string fixture;
  std::optional<int> truncation;
  std::optional<int> even_k;
  bool json = false;
};

/// Errors that map straight to an exit code with a message.
struct Failure {
  int code;
  std::string message;
};

namespace detail {

struct Loaded {
  JobSpec job;
  std::string source;  // fixture id or file path
  int truncation = 0;
};

inline Loaded load(const Options& o) {
  if (o.input.empty() == o.fixture.empty()) {
    throw Failure{kUsage, "give exactly one of --input FILE or --fixture ID"};
  }
  Loaded l;
  std::string text;
  if (!o.fixture.empty()) {
    const Fixture* f = find_fixture(o.fixture);
    if (!f) {
      throw Failure{kUsage, "unknown fixture '" + o.fixture + "'; did you mean '" +
                                nearest_fixture(o.fixture) + "'?"};
    }
    text = f->job;
    l.source = f->id;
  } else {
    std::ifstream in(o.input, std::ios::binary);
    if (!in) throw Failure{kNoInput, "cannot read input file '" + o.input + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    l.source = o.input;
  }
  try {
    l.job = parse_job(text);
  } catch (const ParseError& e) {
    throw Failure{kData, l.source + ":" + e.what()};
  }
  if (o.truncation) {
    l.truncation = *o.truncation;
  } else if (l.job.truncation) {
    l.truncation = *l.job.truncation;
  } else {
    throw Failure{kUsage, "no truncation: set 'truncation:' in the algebra section or pass --truncation"};
  }
  if (o.even_k) l.job.even_k = o.even_k;
  return l;
}

inline PresentedAlgebra algebra_for_model(const Loaded& l) {
  if (l.job.generators.empty()) throw Failure{kData, "A⁺ = 0; nothing to model"};
  if (l.truncation < 2) throw Failure{kUsage, "truncation must be at least 2"};
  // the model through degree N needs A through degree N + 1
  PresentedAlgebra A = job_algebra(l.job, l.truncation + 1);
  if (!A.valid()) {
    auto problems = A.problems();
    problems.push_back("(a model through degree " + std::to_string(l.truncation) +
                       " reads the algebra through degree " + std::to_string(l.truncation + 1) + ")");
    throw ValidationError(problems);
  }
  return A;
}

inline BigradedModel model_for(const Loaded& l) {
  return build_minimal_model(algebra_for_model(l), l.truncation, l.job.names);
}

inline const AttachSpec& single_attachment(const Loaded& l) {
  if (l.job.attachments.empty()) throw Failure{kUsage, l.source + " has no attach section"};
  if (l.job.attachments.size() > 1) {
    throw Failure{kUsage, "several attach sections need even mode ('even:' section or --even-k)"};
  }
  return l.job.attachments.front();
}

inline EvenComplexResult run_even(const Loaded& l) {
  if (l.job.generators.empty()) throw Failure{kData, "A⁺ = 0; nothing to model"};
  const PresentedAlgebra A = job_algebra(l.job, l.truncation);
  std::vector<AlphaFunctional> cells;
  for (const auto& a : l.job.attachments) cells.push_back(job_alpha(a));
  return even_complex_formality(A, *l.job.even_k, cells);
}

inline nlohmann::json envelope(const std::string& command, const std::string& source) {
  return {{"schema", kJsonSchema}, {"command", command}, {"source", source}};
}

inline int cmd_model(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  const BigradedModel M = model_for(l);
  if (o.json) {
    nlohmann::json j = envelope("model", l.source);
    j["model"] = model_json(M);
    out << j.dump(2) << "\n";
  } else {
    out << render_model(M, l.source);
  }
  return kOk;
}

inline int cmd_attach(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  if (l.job.even_k) {
    const EvenComplexResult r = run_even(l);
    if (o.json) {
      nlohmann::json j = envelope("attach", l.source);
      j["even"] = even_json(r);
      out << j.dump(2) << "\n";
    } else {
      out << render_even(r, l.source);
    }
    return kOk;
  }
  const AlphaFunctional alpha = job_alpha(single_attachment(l));
  const BigradedModel M = model_for(l);
  const AttachmentModel Ma = build_attachment(M, alpha);
  const AttachmentReport r = attachment_report(Ma);
  if (o.json) {
    nlohmann::json j = envelope("attach", l.source);
    j["attachment"] = attachment_json(Ma, r);
    out << j.dump(2) << "\n";
  } else {
    out << render_attachment(Ma, r, l.source);
  }
  return kOk;
}

inline int cmd_verdict(const Options& o, std::ostream& out) {
  const Loaded l = load(o);
  if (l.job.even_k) {
    const EvenComplexResult r = run_even(l);
    if (o.json) {
      nlohmann::json j = envelope("verdict", l.source);
      j["mode"] = "even";
      j["even"] = even_json(r);
      j["verdict"] = r.overall.to_json();
      out << j.dump(2) << "\n";
    } else {
      out << render_even(r, l.source);
    }
    return exit_code(r.overall.status);
  }
  const AlphaFunctional alpha = job_alpha(single_attachment(l));
  const BigradedModel M = model_for(l);
  const FormalityVerdict v = formality_verdict(M, alpha);
  if (o.json) {
    nlohmann::json j = envelope("verdict", l.source);
    j["mode"] = "single";
    j["verdict"] = v.to_json();
    out << j.dump(2) << "\n";
  } else {
    out << "verdict for " << l.source << " (" << alpha.cell << "-cell, alpha: " << alpha_to_string(alpha)
        << ")\n"
        << render_verdict(v);
  }
  return exit_code(v.status);
}

inline int cmd_examples(const Options& o, std::ostream& out) {
  if (!o.fixture.empty()) {
    const Fixture* f = find_fixture(o.fixture);
    if (!f) {
      throw Failure{kUsage, "unknown fixture '" + o.fixture + "'; did you mean '" +
                                nearest_fixture(o.fixture) + "'?"};
    }
    if (o.json) {
      nlohmann::json j = envelope("examples", f->id);
      j["fixture"] = {{"id", f->id}, {"title", f->title}, {"notes", f->notes},
                      {"expected", f->expected}, {"job", f->job}};
      out << j.dump(2) << "\n";
    } else {
      out << "# " << f->id << ": " << f->title << "\n# expected: " << f->expected << "\n" << f->job;
    }
    return kOk;
  }
  if (o.json) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& f : fixtures()) {
      list.push_back({{"id", f.id}, {"title", f.title}, {"notes", f.notes}, {"expected", f.expected}});
    }
    nlohmann::json j = envelope("examples", "registry");
    j["fixtures"] = list;
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& f : fixtures()) {
    out << f.id << "  [" << f.expected << "]  " << f.title << "\n    " << f.notes << "\n";
  }
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal Sullivan models, cell attachments and formality verdicts", "sullivan"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    sub->add_option("--input", o.input, "job file");
    sub->add_option("--fixture", o.fixture, needs_input ? "bundled fixture id" : "show one fixture's job");
    sub->add_flag("--json", o.json, "machine-readable output");
    if (needs_input) {
      sub->add_option("--truncation", o.truncation, "model truncation degree N")->check(CLI::NonNegativeNumber);
    }
  };
  CLI::App* model = app.add_subcommand("model", "build and print the minimal model");
  CLI::App* attach = app.add_subcommand("attach", "cohomology of the attachment model and the class u");
  CLI::App* verdict = app.add_subcommand("verdict", "formality verdict for the attachment");
  CLI::App* examples = app.add_subcommand("examples", "list bundled fixtures");
  add_common(model, true);
  add_common(attach, true);
  add_common(verdict, true);
  add_common(examples, false);
  for (CLI::App* sub : {attach, verdict}) {
    sub->add_option("--even-k", o.even_k, "even-cell mode with cells of dimension 4k")
        ->check(CLI::PositiveNumber);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (model->parsed()) return detail::cmd_model(o, out);
    if (attach->parsed()) return detail::cmd_attach(o, out);
    if (verdict->parsed()) return detail::cmd_verdict(o, out);
    return detail::cmd_examples(o, out);
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << (o.fixture.empty() ? o.input : o.fixture) << ":" << e.what() << "\n";
    return kData;
  } catch (const IntegrityError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace sullivan::cli
