#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seqmine/seqmine.hpp"
#include "seqmine/service.hpp"

namespace {

using namespace seqmine;

/// Writes to `path`, or stdout when path is empty or "-".
template <typename F>
void emit(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write(out);
}

TimeWindow window_or_span(const TransactionDb& db, const std::string& start, const std::string& end) {
    if (start.empty() && end.empty()) return db.span();
    TimeWindow span = db.span();
    return TimeWindow::parse(start.empty() ? format_date(span.start) : start,
                             end.empty() ? format_date(span.end) : end);
}

MaxLength max_len_from(std::size_t value) {
    if (value == 0) return std::nullopt;
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential pattern mining with time-window previsualization"};
    app.require_subcommand(1);

    std::string data, start, end, out;

    auto* derive = app.add_subcommand("derive", "Derive per-object sequences under a time window");
    std::size_t preview_k = 0;
    derive->add_option("--data", data, "Transaction CSV (object_id,timestamp,item)")->required();
    derive->add_option("--start", start, "Window start (inclusive), default: first record");
    derive->add_option("--end", end, "Window end (inclusive), default: last record");
    derive->add_option("-k,--preview", preview_k, "Print a preview of the first k sequences with stats instead");
    derive->add_option("-o,--out", out, "Output file (default stdout)");

    auto* mine = app.add_subcommand("mine", "Mine frequent sequential patterns");
    std::string min_support = "2", algorithm = "rsp", format = "csv";
    std::size_t max_len = 0, threads = 1;
    mine->add_option("--data", data, "Transaction CSV")->required();
    mine->add_option("--start", start, "Window start (inclusive)");
    mine->add_option("--end", end, "Window end (inclusive)");
    mine->add_option("-s,--min-support", min_support, "Count (e.g. 2) or fraction (e.g. 0.01, 1%)");
    mine->add_option("-l,--max-len", max_len, "Maximum pattern length, 0 for unbounded");
    mine->add_option("-a,--algorithm", algorithm, "rsp, gsp or naive")
        ->check(CLI::IsMember({"rsp", "gsp", "naive"}));
    mine->add_option("-t,--threads", threads, "RSP counting threads")->check(CLI::PositiveNumber);
    mine->add_option("-f,--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    mine->add_option("-o,--out", out, "Output file (default stdout)");

    auto* gen = app.add_subcommand("gen", "Generate a synthetic transaction CSV");
    SynthParams params;
    gen->add_option("--D", params.D, "Customers");
    gen->add_option("--C", params.C, "Mean transactions per customer");
    gen->add_option("--N", params.N, "Distinct items");
    gen->add_option("--seed", params.seed, "Random seed");
    gen->add_option("--pool", params.pattern_pool_size, "Pattern pool size (0 = N)");
    gen->add_option("--corrupt", params.corruption_prob, "Per-item corruption probability");
    gen->add_option("-o,--out", out, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench", "Compare RSP and GSP runtimes on synthetic data");
    SynthParams bench_params;
    std::vector<std::string> supports{"0.25%", "0.5%", "1%", "2%"};
    std::vector<std::string> algorithms{"rsp", "gsp"};
    std::size_t bench_max_len = 4, repeats = 3;
    bench->add_option("--D", bench_params.D, "Customers");
    bench->add_option("--C", bench_params.C, "Mean transactions per customer");
    bench->add_option("--N", bench_params.N, "Distinct items");
    bench->add_option("--seed", bench_params.seed, "Random seed");
    bench->add_option("--data", data, "Benchmark a transaction CSV instead of generated data");
    bench->add_option("--supports", supports, "Support thresholds")->delimiter(',');
    bench->add_option("--algorithms", algorithms, "Algorithms")->delimiter(',');
    bench->add_option("-l,--max-len", bench_max_len, "Maximum pattern length, 0 for unbounded");
    bench->add_option("--repeats", repeats, "Runs per cell (median reported)")->check(CLI::PositiveNumber);
    bench->add_option("-o,--out", out, "Output CSV (default stdout)");

    auto* serve = app.add_subcommand("serve", "Serve the previsualization and mining API");
    std::string bind = "127.0.0.1:8080", ui_dir;
    serve->add_option("--data", data, "Transaction CSV")->required();
    serve->add_option("--bind", bind, "host:port");
    serve->add_option("--ui", ui_dir, "Static analyst console bundle served at /");

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed()) {
            auto db = load_transactions_file(data);
            auto window = window_or_span(db, start, end);
            if (preview_k > 0) {
                auto report = preview_sample(db, window, preview_k);
                emit(out, [&](std::ostream& os) { os << preview_to_json(report, db.dictionary()).dump(2) << '\n'; });
            } else {
                auto seqs = derive_sequence_db(db, window);
                emit(out, [&](std::ostream& os) { write_sequence_db_csv(os, seqs); });
            }
        } else if (mine->parsed()) {
            auto db = load_transactions_file(data);
            auto seqs = derive_sequence_db(db, window_or_span(db, start, end));
            MiningConfig config;
            config.min_support = MinSupport::parse(min_support);
            config.max_pattern_length = max_len_from(max_len);
            config.threads = threads;
            auto result = miner_by_name(algorithm).run(seqs, config);
            emit(out, [&](std::ostream& os) {
                if (format == "json")
                    os << result_to_json(result).dump(2) << '\n';
                else
                    write_result_csv(os, result);
            });
            std::cerr << result.patterns.size() << " frequent patterns over " << result.object_count
                      << " objects (threshold " << result.threshold << ", " << result.scan_count << " scans, "
                      << result.timings.total_ms << " ms)\n";
        } else if (gen->parsed()) {
            auto db = generate(params);
            emit(out, [&](std::ostream& os) { write_transactions_csv(os, db); });
        } else if (bench->parsed()) {
            BenchGrid grid;
            if (data.empty())
                grid.datasets.push_back({bench_params.label(), bench_params});
            else
                grid.datasets.push_back({data, load_transactions_file(data)});
            for (const auto& s : supports) grid.supports.push_back(MinSupport::parse(s));
            grid.algorithms = algorithms;
            grid.max_pattern_length = max_len_from(bench_max_len);
            grid.repeats = repeats;
            auto report = run_benchmark(grid);
            emit(out, [&](std::ostream& os) { report.write_csv(os); });
        } else if (serve->parsed()) {
            auto [host, port] = parse_bind_address(bind);
            ServiceOptions options;
            options.ui_dir = ui_dir;
            PreviewService service(load_transactions_file(data), options);
            httplib::Server server;
            service.mount(server);
            std::cerr << "serving " << data << " on http://" << host << ':' << port << '\n';
            if (!server.listen(host, port)) {
                std::cerr << "error: cannot listen on " << bind << '\n';
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
