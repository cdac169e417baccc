#include "CLI11.hpp"
#include "json.hpp"

#include "siginv/geometry.hpp"
#include "siginv/gl_invariants.hpp"
#include "siginv/perm_invariants.hpp"
#include "siginv/signature.hpp"
#include "siginv/so_invariants.hpp"
#include "siginv/time_invariants.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace siginv;

constexpr const char* kVersion = "1.0.0";

// exit code 2 = input error, 1 = verification failure
struct CliError {
    int code;
    std::string message;
};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Group parse_group(const std::string& name) {
    if (name == "gl") return Group::GL;
    if (name == "so") return Group::SO;
    if (name == "perm") return Group::PERM;
    throw CliError{2, "unknown group '" + name + "' (expected gl, so, or perm)"};
}

int thread_budget(size_t jobs) {
    int n = 0;
    if (const char* env = std::getenv("SIGINV_THREADS")) {
        n = std::atoi(env);
        if (n < 1) throw CliError{2, "SIGINV_THREADS must be a positive integer"};
    } else {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n < 1) n = 1;
    }
    return std::max(1, std::min<int>(n, static_cast<int>(jobs)));
}

struct Csv {
    std::vector<std::string> header;  // empty when the file has none
    std::vector<std::vector<double>> rows;
};

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        const auto begin = cell.find_first_not_of(" \t\r");
        const auto end = cell.find_last_not_of(" \t\r");
        cells.push_back(begin == std::string::npos ? "" : cell.substr(begin, end - begin + 1));
    }
    return cells;
}

bool parse_cell(const std::string& text, double& value) {
    if (text.empty()) return false;
    char* tail = nullptr;
    value = std::strtod(text.c_str(), &tail);
    return tail == text.c_str() + text.size();
}

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open '" + path + "'"};
    Csv csv;
    std::string line;
    size_t line_no = 0;
    size_t width = 0;
    bool first_data = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_line(line);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (size_t i = 0; i < cells.size() && numeric; ++i) numeric = parse_cell(cells[i], row[i]);
        if (first_data && !numeric) {
            csv.header = cells;
            width = cells.size();
            first_data = false;
            continue;
        }
        if (!numeric)
            throw CliError{2, path + ":" + std::to_string(line_no) + ": non-numeric cell"};
        if (width == 0) width = cells.size();
        if (cells.size() != width)
            throw CliError{2, path + ":" + std::to_string(line_no) + ": expected " +
                                  std::to_string(width) + " columns, found " +
                                  std::to_string(cells.size())};
        first_data = false;
        csv.rows.push_back(std::move(row));
    }
    if (csv.rows.empty()) throw CliError{2, path + ": no data rows"};
    return csv;
}

// split a CSV into a spatial path plus the designated time column, if any
struct SeriesInput {
    PiecewisePath path;        // spatial coordinates only
    std::vector<double> times; // empty unless a time column was designated
};

SeriesInput csv_to_series(const Csv& csv, int time_column) {
    const int width = static_cast<int>(csv.rows.front().size());
    if (time_column >= width)
        throw CliError{2, "time column " + std::to_string(time_column) + " out of range (" +
                              std::to_string(width) + " columns)"};
    SeriesInput out;
    for (const auto& row : csv.rows) {
        std::vector<double> point;
        point.reserve(row.size());
        for (int j = 0; j < width; ++j) {
            if (j == time_column)
                out.times.push_back(row[j]);
            else
                point.push_back(row[j]);
        }
        out.path.points.push_back(std::move(point));
    }
    if (out.path.dimension() == 0) throw CliError{2, "no spatial columns left"};
    return out;
}

// the basis for one group at one setting; GL takes the weight, SO and PERM
// the level; time augmentation lifts to total level m
std::vector<InvariantDescriptor> make_basis(Group group, int d, int weight, int level,
                                            bool time_aug) {
    if (group == Group::GL) {
        int w = weight;
        if (w <= 0) {
            if (level <= 0) throw CliError{2, "gl basis needs --weight (or --level = weight*dim)"};
            if (level % d != 0)
                throw CliError{2, "gl level " + std::to_string(level) +
                                      " is not a multiple of the dimension " + std::to_string(d)};
            w = level / d;
        }
        if (time_aug) {
            const int m = level > 0 ? level : w * d;
            return augmented_gl_basis(d, w, m);
        }
        return gl_basis(d, w);
    }
    if (level < 0) throw CliError{2, "so and perm bases need --level"};
    if (time_aug) {
        return group == Group::SO ? augmented_so_basis(d, level) : augmented_perm_basis(d, level);
    }
    if (group == Group::SO) return d == 2 ? so2_basis(level) : so_basis_general(d, level);
    return perm_basis(d, level);
}

ordered_json descriptor_json(const InvariantDescriptor& desc) {
    ordered_json j;
    j["group"] = group_name(desc.group);
    j["time_augmented"] = desc.time_augmented;
    j["dimension"] = desc.dimension;
    j["level"] = desc.level;
    if (desc.group == Group::GL) j["weight"] = desc.weight;
    j["generator"] = desc.generator;
    j["polynomial"] = desc.poly.to_string();
    return j;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{2, "cannot write '" + path + "'"};
    out << text;
}

// ---- basis ----------------------------------------------------------------

int cmd_basis(const std::string& group_name_arg, int d, int weight, int level, bool time_aug,
              const std::string& format, const std::string& output) {
    const Group group = parse_group(group_name_arg);
    if (d < 1) throw CliError{2, "dimension must be positive"};
    const auto basis = make_basis(group, d, weight, level, time_aug);

    std::ostringstream os;
    if (format == "json") {
        ordered_json j;
        j["meta"] = {{"command", "basis"},
                     {"group", group_name_arg},
                     {"dimension", d},
                     {"time_augmented", time_aug},
                     {"version", kVersion}};
        if (group == Group::GL) j["meta"]["weight"] = weight > 0 ? weight : level / d;
        if (level > 0) j["meta"]["level"] = level;
        j["basis"] = ordered_json::array();
        for (const auto& desc : basis) j["basis"].push_back(descriptor_json(desc));
        os << j.dump(2) << "\n";
    } else if (format == "text") {
        for (size_t i = 0; i < basis.size(); ++i) {
            const auto& desc = basis[i];
            os << "# " << i + 1 << " " << group_name(desc.group) << " d=" << desc.dimension
               << " level=" << desc.level;
            if (desc.group == Group::GL) os << " weight=" << desc.weight;
            os << " " << desc.generator << "\n" << desc.poly.to_string() << "\n";
        }
    } else {
        throw CliError{2, "unknown format '" + format + "'"};
    }
    write_output(output, os.str());
    return 0;
}

// ---- features --------------------------------------------------------------

std::vector<InvariantDescriptor> feature_basis(Group group, int d, int budget, bool time_aug) {
    std::vector<InvariantDescriptor> out;
    if (time_aug) {
        // base degrees 1..m lifted to exactly level m, so every feature is a
        // level-m pairing; the pure-time element carries no series shape and
        // is skipped
        if (group == Group::GL) {
            for (int w = 1; w * d <= budget; ++w) {
                auto part = augmented_gl_basis(d, w, budget);
                out.insert(out.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
            }
        } else {
            auto part = group == Group::SO ? augmented_so_basis(d, budget)
                                           : augmented_perm_basis(d, budget);
            for (auto& desc : part)
                if (remove_zero(desc.poly).degree() > 0) out.push_back(std::move(desc));
        }
        return out;
    }
    if (group == Group::GL) {
        for (int w = 1; w * d <= budget; ++w) {
            auto part = gl_basis(d, w);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    for (int n = 1; n <= budget; ++n) {
        auto part = group == Group::SO ? (d == 2 ? so2_basis(n) : so_basis_general(d, n))
                                       : perm_basis(d, n);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

int cmd_features(const std::vector<std::string>& inputs, const std::string& group_name_arg,
                 int budget, bool time_aug, int time_column, const std::string& output) {
    const Group group = parse_group(group_name_arg);
    if (budget < 1) throw CliError{2, "level budget must be positive"};
    if (time_column >= 0) time_aug = true;

    // load every series up front so the dimension is known and consistent
    std::vector<SeriesInput> series;
    for (const auto& path : inputs) series.push_back(csv_to_series(read_csv(path), time_column));
    const int d = series.front().path.dimension();
    for (size_t i = 1; i < series.size(); ++i)
        if (series[i].path.dimension() != d)
            throw CliError{2, inputs[i] + ": dimension differs from the first series"};

    const auto basis = feature_basis(group, d, budget, time_aug);

    std::vector<std::vector<double>> values(series.size());
    const int workers = thread_budget(series.size());
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    auto run = [&] {
        for (size_t i = next.fetch_add(1); i < series.size(); i = next.fetch_add(1)) {
            const auto& input = series[i];
            PiecewisePath path = input.path;
            Letter first = 1;
            if (time_aug) {
                path = input.times.empty() ? time_augment_path(path)
                                           : time_augment_path(path, input.times);
                first = 0;
            }
            TensorSeries sig = signature(path, budget, first);
            values[i].reserve(basis.size());
            for (const auto& desc : basis) values[i].push_back(sig.pair(desc.poly));
        }
    };
    for (int t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();

    ordered_json j;
    j["meta"] = {{"command", "features"}, {"group", group_name_arg}, {"dimension", d},
                 {"level", budget},       {"time_augmented", time_aug}, {"version", kVersion}};
    j["features"] = ordered_json::array();
    for (size_t i = 0; i < series.size(); ++i) {
        for (size_t k = 0; k < basis.size(); ++k) {
            ordered_json rec = descriptor_json(basis[k]);
            rec["series"] = inputs[i];
            rec["value"] = values[i][k];
            j["features"].push_back(std::move(rec));
        }
    }
    write_output(output, j.dump(2) + "\n");
    return 0;
}

// ---- verify ----------------------------------------------------------------

std::vector<InvariantDescriptor> load_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{2, "cannot open '" + path + "'"};
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw CliError{2, path + ": " + e.what()};
    }
    if (!j.contains("basis") || !j["basis"].is_array())
        throw CliError{2, path + ": missing 'basis' array"};
    std::vector<InvariantDescriptor> out;
    for (const auto& entry : j["basis"]) {
        InvariantDescriptor desc;
        try {
            desc.group = parse_group(entry.at("group").get<std::string>());
            desc.time_augmented = entry.value("time_augmented", false);
            desc.dimension = entry.at("dimension").get<int>();
            desc.level = entry.at("level").get<int>();
            desc.weight = entry.value("weight", 0);
            desc.generator = entry.value("generator", "");
            desc.poly = Polynomial::parse(entry.at("polynomial").get<std::string>(),
                                          desc.dimension);
        } catch (const CliError&) {
            throw;
        } catch (const std::exception& e) {
            throw CliError{2, path + ": bad basis entry: " + e.what()};
        }
        out.push_back(std::move(desc));
    }
    return out;
}

int cmd_verify(const std::string& group_name_arg, int d, int weight, int level, bool time_aug,
               int trials, std::uint64_t seed, const std::string& input,
               const std::string& output) {
    std::vector<InvariantDescriptor> basis;
    Group group;
    if (!input.empty()) {
        basis = load_basis_file(input);
        if (basis.empty()) throw CliError{2, input + ": empty basis"};
        group = basis.front().group;
    } else {
        group = parse_group(group_name_arg);
        if (d < 1) throw CliError{2, "dimension must be positive"};
        basis = make_basis(group, d, weight, level, time_aug);
    }

    std::ostringstream os;
    bool all_passed = true;
    for (size_t i = 0; i < basis.size(); ++i) {
        const auto& desc = basis[i];
        VerifyReport report;
        if (desc.time_augmented)
            report = verify_gl0_invariance(desc, trials, seed + i);
        else if (desc.group == Group::GL)
            report = verify_gl_invariance(desc, trials, seed + i);
        else if (desc.group == Group::SO)
            report = verify_so_invariance(desc, trials, seed + i);
        else
            report = verify_perm_invariance(desc, trials, seed + i);
        if (report.passed) {
            os << "PASS " << desc.generator << "\n";
        } else {
            all_passed = false;
            os << "FAIL " << desc.generator << ": " << report.witness << "\n";
        }
    }
    os << (all_passed ? "verified " : "FAILED ") << basis.size() << " "
       << group_name(group) << " invariants, trials=" << trials << ", seed=" << seed << "\n";
    write_output(output, os.str());
    return all_passed ? 0 : 1;
}

// ---- volume ----------------------------------------------------------------

int cmd_volume(const std::string& input, const std::string& method, const std::string& output) {
    const Csv csv = read_csv(input);
    const SeriesInput series = csv_to_series(csv, -1);
    const int d = series.path.dimension();
    double factorial = 1.0;
    for (int i = 2; i <= d; ++i) factorial *= i;

    std::ostringstream os;
    try {
        if (method == "pairing") {
            os << format_double(signed_volume(series.path)) << "\n";
        } else if (method == "determinant") {
            os << format_double(signed_volume_determinant_sum(series.path.points) / factorial)
               << "\n";
        } else if (method == "both") {
            const double by_pairing = signed_volume(series.path);
            const double by_determinant =
                signed_volume_determinant_sum(series.path.points) / factorial;
            os << "pairing " << format_double(by_pairing) << "\n";
            os << "determinant " << format_double(by_determinant) << "\n";
            os << "difference " << format_double(std::abs(by_pairing - by_determinant)) << "\n";
        } else {
            throw CliError{2, "unknown method '" + method + "'"};
        }
    } catch (const std::invalid_argument& e) {
        throw CliError{2, e.what()};
    }
    write_output(output, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant features of multidimensional time series via path signatures"};
    app.require_subcommand(1);

    std::string group = "gl", format = "text", output, input, method = "pairing";
    std::vector<std::string> inputs;
    int dim = 2, weight = 0, level = -1, trials = 20, time_column = -1;
    std::uint64_t seed = 42;
    bool time_aug = false;

    auto* basis_cmd = app.add_subcommand("basis", "print an invariant basis");
    basis_cmd->add_option("--group", group, "gl, so, or perm")->required();
    basis_cmd->add_option("--dim", dim, "path dimension d")->required();
    basis_cmd->add_option("--weight", weight, "gl weight w");
    basis_cmd->add_option("--level", level, "homogeneity (total level when time-augmented)");
    basis_cmd->add_flag("--time-augment", time_aug, "lift over the extra time letter 0");
    basis_cmd->add_option("--format", format, "text or json");
    basis_cmd->add_option("--output", output, "write here instead of stdout");

    auto* features_cmd = app.add_subcommand("features", "extract invariant features from CSV series");
    features_cmd->add_option("--input", inputs, "CSV file, one series per file")->required();
    features_cmd->add_option("--group", group, "gl, so, or perm")->required();
    features_cmd->add_option("--level", level, "signature level budget")->required();
    features_cmd->add_flag("--time-augment", time_aug, "augment with index time");
    features_cmd->add_option("--time-column", time_column, "CSV column holding time (implies augmentation)");
    features_cmd->add_option("--output", output, "write here instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "check invariance on random trials");
    verify_cmd->add_option("--group", group, "gl, so, or perm");
    verify_cmd->add_option("--dim", dim, "path dimension d");
    verify_cmd->add_option("--weight", weight, "gl weight w");
    verify_cmd->add_option("--level", level, "homogeneity (total level when time-augmented)");
    verify_cmd->add_flag("--time-augment", time_aug, "verify the lifted basis");
    verify_cmd->add_option("--trials", trials, "random trials per element");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--input", input, "verify a basis JSON file instead of generating");
    verify_cmd->add_option("--output", output, "write here instead of stdout");

    auto* volume_cmd = app.add_subcommand("volume", "signed volume of a polyline");
    volume_cmd->add_option("--input", input, "CSV file")->required();
    volume_cmd->add_option("--method", method, "pairing, determinant, or both");
    volume_cmd->add_option("--output", output, "write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (basis_cmd->parsed())
            return cmd_basis(group, dim, weight, level, time_aug, format, output);
        if (features_cmd->parsed())
            return cmd_features(inputs, group, level, time_aug, time_column, output);
        if (verify_cmd->parsed())
            return cmd_verify(group, dim, weight, level, time_aug, trials, seed, input, output);
        if (volume_cmd->parsed()) return cmd_volume(input, method, output);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
