#ifndef KRING_PIPELINE_HPP
#define KRING_PIPELINE_HPP

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "kring/examples.hpp"
#include "kring/presentation.hpp"
#include "kring/report.hpp"
#include "kring/spec_io.hpp"

namespace kring {

/// Exit codes shared by the library pipeline and the CLI.
inline constexpr int kExitConforming = 0;
inline constexpr int kExitNonConforming = 2;  // hypotheses hold, conclusion fails or indeterminate
inline constexpr int kExitHypothesis = 3;     // invalid nerve, nonsingularity violated, no shelling
inline constexpr int kExitInput = 4;          // malformed document or parameters

enum class Command { validate, shell, present, cohomology, report };

inline std::optional<Command> parse_command(const std::string& s) {
    if (s == "validate") return Command::validate;
    if (s == "shell") return Command::shell;
    if (s == "present") return Command::present;
    if (s == "cohomology") return Command::cohomology;
    if (s == "report") return Command::report;
    return std::nullopt;
}

inline const char* command_name(Command c) {
    switch (c) {
        case Command::validate: return "validate";
        case Command::shell: return "shell";
        case Command::present: return "present";
        case Command::cohomology: return "cohomology";
        case Command::report: return "report";
    }
    return "?";
}

namespace detail {

class StageClock {
  public:
    StageClock() : last_(std::chrono::steady_clock::now()), start_(last_) {}

    double lap_ms() {
        auto now = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }
    double total_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point last_, start_;
};

inline void finish(Report& rep, bool conforming, const std::string& diagnostics = "") {
    rep.exit_code = conforming ? kExitConforming : kExitNonConforming;
    rep.verdict = conforming ? "conforming" : "non-conforming";
    if (rep.diagnostics.empty()) rep.diagnostics = diagnostics;
}

}  // namespace detail

/// Runs one pipeline stage (or all of them, for Command::report) on a parsed
/// document.  Never throws on hypothesis or conformance failures; those are
/// encoded in the report's verdict and exit code.  std::invalid_argument
/// from document shape problems is mapped to the input-error verdict.
inline Report run(Command cmd, const SpecDocument& doc, bool want_timings = false) {
    Report rep;
    rep.command = command_name(cmd);
    rep.input = doc;
    detail::StageClock clock;
    Timings tm;

    auto hypothesis_fail = [&](const std::string& what) {
        rep.exit_code = kExitHypothesis;
        rep.verdict = "hypothesis-failure";
        rep.diagnostics = what;
    };

    try {
        ManifoldSpec spec = to_manifold_spec(doc);

        rep.validation = spec.complex.validate();
        if (rep.validation->ok) rep.nonsingular = validate_nonsingular(spec.complex, spec.lambda);
        tm.validate_ms = clock.lap_ms();
        if (!rep.validation->ok || !rep.nonsingular->ok) {
            hypothesis_fail(!rep.validation->ok
                                ? "nerve validation failed"
                                : "characteristic matrix fails unimodularity on listed faces");
            if (want_timings) {
                tm.total_ms = clock.total_ms();
                rep.timings = tm;
            }
            return rep;
        }
        if (cmd == Command::validate) {
            detail::finish(rep, true);
            if (want_timings) {
                tm.total_ms = clock.total_ms();
                rep.timings = tm;
            }
            return rep;
        }

        rep.shelling_searched = true;
        std::optional<Shelling> sh = find_shelling(spec.complex);
        tm.shelling_ms = clock.lap_ms();
        if (!sh) {
            hypothesis_fail("the nerve admits no shelling order");
            if (want_timings) {
                tm.total_ms = clock.total_ms();
                rep.timings = tm;
            }
            return rep;
        }
        rep.shelling = *sh;
        rep.h = h_vector(*sh);
        rep.betti = betti_numbers(*sh, spec.n());
        rep.cells = cell_dimensions(*sh, spec.n());

        bool ok = true;
        std::string diag;

        if (cmd == Command::present || cmd == Command::report) {
            rep.presentation = k_presentation(spec, doc.options);
            tm.k_theory_ms = clock.lap_ms();
            if (!rep.presentation->conforming) {
                ok = false;
                diag = rep.presentation->diagnostics;
            }
        }
        if (cmd == Command::cohomology || cmd == Command::report) {
            rep.cohomology = cohomology_presentation(spec, doc.options);
            tm.cohomology_ms = clock.lap_ms();

            std::vector<long> graded = rep.cohomology->graded_ranks;
            std::vector<long> betti = *rep.betti;
            std::size_t width = std::max(graded.size(), betti.size());
            graded.resize(width, 0);
            betti.resize(width, 0);
            rep.betti_match = graded == betti;
            if (!rep.cohomology->conforming || !*rep.betti_match) {
                ok = false;
                if (diag.empty())
                    diag = !rep.cohomology->conforming
                               ? rep.cohomology->diagnostics
                               : "cohomology graded ranks disagree with the shelling Betti numbers";
            }
        }
        detail::finish(rep, ok, diag);
    } catch (const hypothesis_error& e) {
        hypothesis_fail(e.what());
    } catch (const std::invalid_argument& e) {
        rep.exit_code = kExitInput;
        rep.verdict = "input-error";
        rep.diagnostics = e.what();
    } catch (const std::out_of_range& e) {
        rep.exit_code = kExitInput;
        rep.verdict = "input-error";
        rep.diagnostics = e.what();
    }

    if (want_timings) {
        tm.total_ms = clock.total_ms();
        rep.timings = tm;
    }
    return rep;
}

/// Writes content through a sibling temp file and renames it into place, so
/// concurrent runs never interleave within one output file.
inline void write_file_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
        out << content;
        if (!out.flush()) throw std::runtime_error("short write: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace kring

#endif  // KRING_PIPELINE_HPP
