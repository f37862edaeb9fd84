// Copyright 2026 The megs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// megs: command-line front end for the MEGS catalog, canonical states,
// concurrence reports and class-operator dumps.
//
// Exit codes: 0 success, 2 usage or validation error, 3 I/O error,
// 4 capacity error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "megs/megs.hpp"

namespace {

using megs::ClassKind;
using megs::ClassLabel;
using megs::cplx;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapacity = 4;

constexpr const char *kIndexNote =
    "Subsystem indices are 0-based: subsystem 0 is Q_1, subsystem m-1 is Q_m.";

std::string fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos) {
        s = s.substr(s.front() == '-' ? 1 : 0);
    }
    return s;
}

/// x rounded to 12 decimals, so machine output has the same precision as text.
double round12(double x) {
    const double r = std::strtod(fixed12(x).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;
}

ojson complex_json(cplx z) { return ojson::array({round12(z.real()), round12(z.imag())}); }

std::string complex_text(cplx z) {
    const std::string im = fixed12(std::abs(z.imag()));
    return fixed12(z.real()) + (std::signbit(z.imag()) && im != fixed12(0.0) ? " - " : " + ") +
           im + "i";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

void emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) {
            throw megs::IoError("cannot write to standard output");
        }
    } else {
        megs::write_text_file(out_path, text);
    }
}

std::string lambda_text(const megs::LambdaIndex &lambda) {
    std::string s = "[";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        s += (i ? "," : "") + std::string("(") + std::to_string(lambda.pairs[i].k) + "," +
             std::to_string(lambda.pairs[i].l) + ")";
    }
    return s + "]";
}

ojson lambda_json(const megs::LambdaIndex &lambda) {
    auto out = ojson::array();
    for (const auto &p : lambda.pairs) {
        out.push_back({p.k, p.l});
    }
    return out;
}

std::string dims_text(std::span<const std::size_t> dims) {
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        s += (i ? "," : "") + std::to_string(dims[i]);
    }
    return s + "]";
}

std::vector<std::string> part_names(const ClassLabel &label) {
    if (label.kind() == ClassKind::Epr) {
        return {"U", "L"};
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < megs::sign_component_count(label); ++i) {
        names.push_back("P_" + std::to_string(i));
    }
    return names;
}

// ---------------------------------------------------------------- list

struct ListArgs {
    std::size_t m = 0;
    std::string format = "text";
    std::string out;
};

int run_list(const ListArgs &args) {
    const auto catalog = megs::enumerate_megs(args.m);
    std::string text;
    if (args.format == "machine") {
        ojson doc;
        doc["m"] = catalog.m;
        auto labels = ojson::array();
        for (const auto &label : catalog.labels) {
            labels.push_back(label.to_string());
        }
        doc["labels"] = std::move(labels);
        ojson counts = ojson::object();
        for (const auto &[k, n] : catalog.counts) {
            counts[std::to_string(k)] = n;
        }
        doc["counts"] = std::move(counts);
        doc["total"] = catalog.total();
        text = doc.dump() + "\n";
    } else {
        for (const auto &label : catalog.labels) {
            text += label.to_string() + "\n";
        }
    }
    emit(text, args.out);
    return kExitOk;
}

// ---------------------------------------------------------------- make-state

struct MakeStateArgs {
    std::string kind;
    std::size_t m = 0;
    std::vector<std::size_t> dims;
    std::uint64_t seed = 0;
    std::string label;
    std::string format = "machine";
    std::string out;
};

int run_make_state(const MakeStateArgs &args) {
    std::optional<megs::MultiState> psi;
    std::string label = args.label;
    if (args.kind == "bell") {
        if (args.m != 0 && args.m != 2) {
            throw megs::DomainError("bell states have m = 2");
        }
        psi = megs::bell_state();
        if (label.empty()) {
            label = "bell";
        }
    } else if (args.kind == "ghz" || args.kind == "w") {
        const std::size_t min_m = args.kind == "ghz" ? 2 : 3;
        if (args.m < min_m) {
            throw megs::DomainError(args.kind + " states need --m >= " + std::to_string(min_m));
        }
        psi = args.kind == "ghz" ? megs::ghz_state(args.m) : megs::w_state(args.m);
        if (label.empty()) {
            label = args.kind + std::to_string(args.m);
        }
    } else {
        if (args.dims.empty()) {
            throw megs::DomainError(args.kind + " states need --dims");
        }
        for (const std::size_t n : args.dims) {
            if (n < 2) {
                throw megs::DomainError("every subsystem dimension must be >= 2");
            }
        }
        if (megs::total_dimension(args.dims) > megs::dense_cap_from_env()) {
            throw megs::CapacityError("state dimension exceeds the dense cap");
        }
        psi = args.kind == "product" ? megs::product_state(args.dims, args.seed)
                                     : megs::random_state(args.dims, args.seed);
        if (label.empty()) {
            label = args.kind + " seed=" + std::to_string(args.seed);
        }
    }

    std::string text;
    if (args.format == "machine") {
        text = megs::format_state(*psi, label);
    } else {
        text = "# " + label + "  dims " + dims_text(psi->dims()) + "\n";
        for (std::size_t i = 0; i < psi->dimension(); ++i) {
            if ((*psi)[i] == cplx{}) {
                continue;
            }
            std::string basis;
            for (const std::size_t d : megs::multi_index(i, psi->dims())) {
                basis += std::to_string(d);
            }
            text += pad(std::to_string(i), 8) + pad("|" + basis + ">", 12) +
                    complex_text((*psi)[i]) + "\n";
        }
    }
    emit(text, args.out);
    return kExitOk;
}

// ---------------------------------------------------------------- concurrence

struct ConcurrenceArgs {
    std::string state;
    std::string selector = "ALL";
    std::string format = "text";
    bool verbose = false;
    bool normalize = false;
    std::string out;
};

ojson operators_json(const std::vector<megs::OperatorValue> &values, const ClassLabel &label) {
    const auto names = part_names(label);
    auto ops = ojson::array();
    for (const auto &v : values) {
        ojson o;
        o["pi_half_pair"] = {v.pi_half_pair.a, v.pi_half_pair.b};
        o["lambda"] = lambda_json(v.lambda);
        o["value"] = complex_json(v.value);
        o["magnitude"] = round12(std::abs(v.value));
        ojson parts = ojson::object();
        for (std::size_t i = 0; i < v.parts.size(); ++i) {
            parts[names[i]] = complex_json(v.parts[i]);
        }
        o["parts"] = std::move(parts);
        ops.push_back(std::move(o));
    }
    return ops;
}

std::string operators_text(const std::vector<megs::OperatorValue> &values,
                           const ClassLabel &label) {
    const auto names = part_names(label);
    std::string text;
    for (const auto &v : values) {
        text += "    pi/2 pair (" + std::to_string(v.pi_half_pair.a) + "," +
                std::to_string(v.pi_half_pair.b) + ")  lambda " + lambda_text(v.lambda) +
                "  |value| " + fixed12(std::abs(v.value)) + "  value " +
                complex_text(v.value) + "\n";
        for (std::size_t i = 0; i < v.parts.size(); ++i) {
            text += "        " + pad(names[i], 6) + complex_text(v.parts[i]) + "\n";
        }
    }
    return text;
}

int run_concurrence(const ConcurrenceArgs &args) {
    const auto file = megs::read_state_file(args.state, args.normalize);
    const auto &psi = file.state;
    megs::ConcurrenceOptions opts;
    opts.dense_cap = megs::dense_cap_from_env();
    if (psi.dimension() > opts.dense_cap) {
        throw megs::CapacityError("state dimension " + std::to_string(psi.dimension()) +
                                  " exceeds the dense cap " + std::to_string(opts.dense_cap));
    }

    std::vector<ClassLabel> labels;
    const bool all = args.selector == "ALL" || args.selector == "all";
    if (all) {
        labels = megs::enumerate_megs(psi.num_subsystems()).labels;
    } else {
        labels.push_back(megs::parse_label(args.selector));
        labels.back().validate(psi.num_subsystems());
    }

    ojson doc;
    doc["dims"] = std::vector<std::size_t>(psi.dims().begin(), psi.dims().end());
    if (file.label) {
        doc["label"] = *file.label;
    }
    doc["state_digest"] = megs::state_digest(psi);

    std::string head = "state   " + (file.label ? *file.label : args.state) + "\n" +
                       "dims    " + dims_text(psi.dims()) + "\n" + "digest  " +
                       megs::state_digest(psi) + "\n\n";
    std::string body;
    ojson per_class = ojson::object();
    ojson verbose_ops = ojson::object();

    std::size_t width = 12;
    for (const auto &label : labels) {
        width = std::max(width, label.to_string().size() + 2);
    }
    std::optional<megs::ConcurrenceReport> report;
    if (all) {
        report = megs::full_report(psi, opts);
    }
    for (const auto &label : labels) {
        const double c = report ? report->per_class.at(label)
                                : megs::class_concurrence(psi, label, opts);
        per_class[label.to_string()] = round12(c);
        body += pad(label.to_string(), width) + fixed12(c) + "\n";
        if (args.verbose) {
            const auto values = megs::class_operator_values(psi, label, opts, true);
            verbose_ops[label.to_string()] = operators_json(values, label);
            body += operators_text(values, label);
        }
    }

    std::string text;
    if (report) {
        if (args.format == "machine") {
            ojson jr;
            jr["per_class"] = std::move(per_class);
            jr["w_class"] = round12(report->w_class);
            jr["total"] = round12(report->total);
            doc["report"] = std::move(jr);
        } else {
            body += "\n" + pad("W", width) + fixed12(report->w_class) + "\n" +
                    pad("total", width) + fixed12(report->total) + "\n";
        }
    } else if (args.format == "machine") {
        doc["class"] = labels.front().to_string();
        doc["value"] = per_class[labels.front().to_string()];
    }
    if (args.format == "machine") {
        if (args.verbose) {
            doc["operators"] = std::move(verbose_ops);
        }
        text = doc.dump() + "\n";
    } else {
        text = head + body;
    }
    emit(text, args.out);
    return kExitOk;
}

// ---------------------------------------------------------------- operator

struct OperatorArgs {
    std::vector<std::size_t> dims;
    std::string label;
    std::string pair;
    std::string lambda;
    std::string part = "FULL";
    std::string format = "machine";
    std::string out;
};

std::vector<std::size_t> parse_index_list(const std::string &text, char sep) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
            item.size() > 6) {
            throw megs::DomainError("bad index '" + item + "' in '" + text + "'");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

int run_operator(const OperatorArgs &args) {
    const ClassLabel label = megs::parse_label(args.label);
    label.validate(args.dims.size());
    const std::size_t cap = megs::dense_cap_from_env();
    const auto subset = label.subset();

    megs::SubsystemPair pair{subset[0], subset[1]};
    if (!args.pair.empty()) {
        const auto p = parse_index_list(args.pair, ',');
        if (p.size() != 2) {
            throw megs::DomainError("--pair takes two subsystem indices, e.g. 0,1");
        }
        pair = {p[0], p[1]};
    }
    megs::LambdaIndex lambda{subset, {}};
    if (args.lambda.empty()) {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            lambda.pairs.push_back({0, 1});
        }
    } else {
        std::stringstream ss(args.lambda);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto kl = parse_index_list(item, ':');
            if (kl.size() != 2) {
                throw megs::DomainError("--lambda entries are k:l, e.g. 0:1,0:2");
            }
            lambda.pairs.push_back({kl[0], kl[1]});
        }
    }

    const megs::ClassOperator op =
        label.kind() == ClassKind::Epr
            ? megs::epr_operator(args.dims, pair, lambda, cap)
            : megs::ghz_operator(args.dims, subset, pair, lambda, cap);

    std::string part = args.part;
    for (char &c : part) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    megs::ComplexMatrix matrix;
    std::string part_name;
    if (part == "FULL") {
        matrix = op.matrix;
        part_name = "FULL";
    } else if (part == "U" || part == "L") {
        const auto split = megs::split_anti_diagonal(op);
        matrix = part == "U" ? split.upper : split.lower;
        part_name = part;
    } else if (part.rfind("P", 0) == 0) {
        const std::string digits = part.substr(part.rfind("P_", 0) == 0 ? 2 : 1);
        const auto idx = parse_index_list(digits, ',');
        const auto parts = megs::split_sign_components(op);
        if (idx.size() != 1 || idx[0] >= parts.size()) {
            throw megs::DomainError("--part P_i needs 0 <= i < " + std::to_string(parts.size()));
        }
        matrix = parts[idx[0]];
        part_name = "P_" + std::to_string(idx[0]);
    } else {
        throw megs::DomainError("--part must be FULL, U, L or P_i");
    }

    std::string text;
    if (args.format == "machine") {
        ojson doc;
        doc["dims"] = args.dims;
        doc["label"] = label.to_string();
        doc["pi_half_pair"] = {op.pi_half_pair.a, op.pi_half_pair.b};
        doc["lambda"] = lambda_json(op.lambda);
        doc["part"] = part_name;
        doc["rows"] = matrix.rows();
        doc["cols"] = matrix.cols();
        auto rows = ojson::array();
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            auto row = ojson::array();
            for (std::size_t j = 0; j < matrix.cols(); ++j) {
                row.push_back({matrix(i, j).real(), matrix(i, j).imag()});
            }
            rows.push_back(std::move(row));
        }
        doc["matrix"] = std::move(rows);
        text = doc.dump() + "\n";
    } else {
        text = "# " + label.to_string() + "  dims " + dims_text(args.dims) + "  pi/2 pair (" +
               std::to_string(op.pi_half_pair.a) + "," + std::to_string(op.pi_half_pair.b) +
               ")  lambda " + lambda_text(op.lambda) + "  part " + part_name + "\n";
        for (std::size_t i = 0; i < matrix.rows(); ++i) {
            for (std::size_t j = 0; j < matrix.cols(); ++j) {
                const cplx z = matrix(i, j);
                std::string cell = z == cplx{}                   ? "0"
                                   : z.imag() == 0.0             ? std::to_string(static_cast<int>(z.real()))
                                   : z.real() == 0.0 && z.imag() == 1.0  ? "i"
                                   : z.real() == 0.0 && z.imag() == -1.0 ? "-i"
                                                                          : complex_text(z);
                text += (j ? " " : "") + pad(cell, 3);
            }
            text.erase(text.find_last_not_of(' ') + 1);
            text += "\n";
        }
    }
    emit(text, args.out);
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"megs: minimal entanglement generating set and concurrence classes of pure "
                 "multipartite states.\n" +
                 std::string(kIndexNote)};
    app.require_subcommand(1);
    app.set_version_flag("--version", "megs 0.1.0");

    const auto add_format = [](CLI::App *cmd, std::string &format) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "machine"}))
            ->capture_default_str();
    };

    ListArgs list_args;
    auto *list = app.add_subcommand("list", "List the MEGS class labels for m subsystems");
    list->add_option("m", list_args.m, "Number of subsystems (>= 2)")->required();
    add_format(list, list_args.format);
    list->add_option("--out", list_args.out, "Output path (default: standard output)");

    MakeStateArgs ms_args;
    auto *make_state = app.add_subcommand("make-state", "Write a canonical or seeded state file");
    make_state->add_option("kind", ms_args.kind, "State kind")
        ->required()
        ->check(CLI::IsMember({"bell", "ghz", "w", "product", "random"}));
    make_state->add_option("--m", ms_args.m, "Number of qubits (ghz, w)");
    make_state->add_option("--dims", ms_args.dims, "Subsystem dimensions (product, random)")
        ->delimiter(',');
    make_state->add_option("--seed", ms_args.seed, "RNG seed (product, random)")
        ->capture_default_str();
    make_state->add_option("--label", ms_args.label, "Label stored in the file");
    add_format(make_state, ms_args.format);
    make_state->add_option("--out", ms_args.out, "Output path (default: standard output)");

    ConcurrenceArgs c_args;
    auto *conc = app.add_subcommand("concurrence", "Concurrence classes of a state file");
    conc->add_option("state", c_args.state, "State file")->required();
    conc->add_option("--class", c_args.selector,
                     "ALL or one label such as EPR(0,1) or GHZ3(0,1,2)")
        ->capture_default_str();
    add_format(conc, c_args.format);
    conc->add_flag("--verbose,-v", c_args.verbose,
                   "Per-operator values with their U/L or P_i parts");
    conc->add_flag("--normalize", c_args.normalize, "Rescale unnormalized input");
    conc->add_option("--out", c_args.out, "Output path (default: standard output)");

    OperatorArgs op_args;
    auto *oper = app.add_subcommand("operator", "Dump one class operator or one of its parts");
    oper->add_option("--dims", op_args.dims, "Subsystem dimensions, e.g. 2,2,2")
        ->required()
        ->delimiter(',');
    oper->add_option("--class", op_args.label, "Class label, e.g. GHZ3(0,1,2)")->required();
    oper->add_option("--pair", op_args.pair, "pi/2 subsystem pair a,b (default: first)");
    oper->add_option("--lambda", op_args.lambda,
                     "Index pair per active subsystem, k:l,... (default: 0:1 each)");
    oper->add_option("--part", op_args.part, "FULL, U, L or P_i")->capture_default_str();
    add_format(oper, op_args.format);
    oper->add_option("--out", op_args.out, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (list->parsed()) {
            return run_list(list_args);
        }
        if (make_state->parsed()) {
            return run_make_state(ms_args);
        }
        if (conc->parsed()) {
            return run_concurrence(c_args);
        }
        return run_operator(op_args);
    } catch (const megs::CapacityError &e) {
        std::cerr << "megs: capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const megs::IoError &e) {
        std::cerr << "megs: I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const megs::DomainError &e) {
        std::cerr << "megs: " << e.what() << "\n";
        return kExitUsage;
    }
}
