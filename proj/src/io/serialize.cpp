#include "persuade/io/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <fmt/format.h>
#include <system_error>

#include "persuade/error.hpp"

namespace persuade::io {

using nlohmann::ordered_json;

namespace {

using Row = std::vector<std::string_view>;

std::vector<Row> split_csv(std::string_view text, std::string_view header) {
    std::vector<Row> rows;
    bool first = true;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (first) {
            if (line != header)
                throw ValidationError(fmt::format("expected CSV header \"{}\", got \"{}\"", header,
                                                  line));
            first = false;
            continue;
        }
        Row row;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            row.push_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (first) throw ValidationError(fmt::format("CSV table lacks the header \"{}\"", header));
    return rows;
}

double parse_number(std::string_view s) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ValidationError(fmt::format("not a number: \"{}\"", s));
    return x;
}

void require_columns(const Row& row, std::size_t n) {
    if (row.size() != n)
        throw ValidationError(fmt::format("expected {} CSV columns, got {}", n, row.size()));
}

void require_grid(const std::vector<Row>& rows) {
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(parse_number(rows[i][0]) - GridDensity1D::node_of(i, n)) > 1e-9)
            throw ValidationError("CSV abscissae are not the uniform grid on [0,1]");
}

std::vector<double> column(const std::vector<Row>& rows, std::size_t k) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(parse_number(r[k]));
    return out;
}

std::vector<Row> split_checked(std::string_view text, std::string_view header, std::size_t cols) {
    auto rows = split_csv(text, header);
    for (const auto& r : rows) require_columns(r, cols);
    return rows;
}

ordered_json number_or_null(const std::optional<double>& x) {
    return x ? ordered_json(round12(*x)) : ordered_json(nullptr);
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    return fmt::format("{:.12g}", x);
}

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    return std::stod(fmt::format("{:.12g}", x));
}

std::string density_csv(const GridDensity1D& d) {
    std::string out = "x,value\n";
    for (std::size_t i = 0; i < d.size(); ++i)
        out += fmt::format("{},{}\n", format_number(d.node(i)), format_number(d.value(i)));
    return out;
}

std::string value_table_csv(const ValueTable& vt) {
    std::string out = "mu,v,h\n";
    for (std::size_t i = 0; i < vt.size(); ++i)
        out += fmt::format("{},{},{}\n", format_number(vt.posterior(i)), format_number(vt.v()[i]),
                           format_number(vt.h()[i]));
    return out;
}

std::string partition_csv(const ReceiverPartition& part) {
    std::string out = "c,p_lo,p_hi\n";
    for (std::size_t i = 0; i < part.size(); ++i)
        out += fmt::format("{},{},{}\n", format_number(part.cost(i)), format_number(part.lower[i]),
                           format_number(part.upper[i]));
    return out;
}

std::string sweep_csv(const SweepResult& sweep) {
    std::string out = "param,mu_hat,sigma0,sigma1,value,shape\n";
    for (const auto& r : sweep.records)
        out += fmt::format("{},{},{},{},{},{}\n", format_number(r.param),
                           r.threshold ? format_number(*r.threshold) : std::string(),
                           format_number(r.policy.good_if_bad), format_number(r.policy.good_if_good),
                           format_number(r.value), to_string(r.shape.tag));
    return out;
}

GridDensity1D parse_density_csv(std::string_view text) {
    const auto rows = split_checked(text, "x,value", 2);
    require_grid(rows);
    return GridDensity1D(column(rows, 1));
}

ValueTable parse_value_table_csv(std::string_view text) {
    const auto rows = split_checked(text, "mu,v,h", 3);
    require_grid(rows);
    try {
        return ValueTable(column(rows, 1), column(rows, 2));
    } catch (const DomainError& e) {
        throw ValidationError(fmt::format("malformed value table: {}", e.what()));
    }
}

ReceiverPartition parse_partition_csv(std::string_view text, const Policy& policy) {
    const auto rows = split_checked(text, "c,p_lo,p_hi", 3);
    require_grid(rows);
    return ReceiverPartition{policy, column(rows, 1), column(rows, 2)};
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
    const auto rows = split_checked(text, "param,mu_hat,sigma0,sigma1,value,shape", 6);
    std::vector<SweepRecord> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        const auto tag = shape_from_string(r[5]);
        if (!tag) throw ValidationError(fmt::format("unknown shape \"{}\"", r[5]));
        std::optional<double> threshold;
        if (!r[1].empty()) threshold = parse_number(r[1]);
        out.push_back({parse_number(r[0]), threshold, Policy{parse_number(r[2]), parse_number(r[3])},
                       parse_number(r[4]), ShapeClass{*tag, std::nullopt}});
    }
    return out;
}

ordered_json solution_json(const PersuasionSolution& sol) {
    return ordered_json{{"method", to_string(sol.method)},
                        {"mu_hat", number_or_null(sol.threshold)},
                        {"mu_lo", round12(sol.mu_lo)},
                        {"mu_hi", round12(sol.mu_hi)},
                        {"weight_hi", round12(sol.weight_hi)},
                        {"sigma0", round12(sol.policy.good_if_bad)},
                        {"sigma1", round12(sol.policy.good_if_good)},
                        {"value", round12(sol.value)},
                        {"shape", to_string(sol.shape.tag)}};
}

ordered_json payoff_json(const Policy& policy, double payoff, const PartitionMeasures& m) {
    return ordered_json{{"sigma0", round12(policy.good_if_bad)},
                        {"sigma1", round12(policy.good_if_good)},
                        {"payoff", round12(payoff)},
                        {"measures",
                         {{"never", round12(m.never)},
                          {"compliers", round12(m.compliers)},
                          {"always", round12(m.always)}}}};
}

ordered_json verdict_json(const SweepResult& sweep) {
    return ordered_json{{"monotone", sweep.monotone()},
                        {"violations", sweep.violations},
                        {"warnings", sweep.warnings}};
}

ordered_json condition_json(const ConditionReport& r) {
    const bool peaked = r.kind == ConditionKind::Peakedness;
    return ordered_json{{"condition", to_string(r.kind)},
                        {"gamma", round12(r.gamma)},
                        {peaked ? "lhs_sup" : "lhs_inf", round12(r.lhs)},
                        {"rhs", round12(r.rhs)},
                        {"satisfied", r.satisfied}};
}

ordered_json shape_json(const ShapeClass& shape) {
    return ordered_json{{"shape", to_string(shape.tag)}, {"location", number_or_null(shape.location)}};
}

ordered_json simulation_json(const SimulationResult& sim, std::uint64_t seed, double payoff) {
    return ordered_json{{"n_agents", sim.n_agents},
                        {"seed", seed},
                        {"mean_action", round12(sim.mean_action)},
                        {"standard_error", round12(sim.standard_error)},
                        {"payoff", round12(payoff)},
                        {"difference", round12(sim.mean_action - payoff)}};
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ValidationError(fmt::format("cannot write {}", tmp.string()));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw ValidationError(fmt::format("failed writing {}", tmp.string()));
    }
    fs::rename(tmp, path);
}

}  // namespace persuade::io
