#pragma once

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stop_token>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "seqmine/bench.hpp"
#include "seqmine/io.hpp"
#include "seqmine/sequence_db.hpp"
#include "seqmine/transaction_db.hpp"

namespace seqmine {

enum class JobState { pending, running, done, failed };

inline const char* to_string(JobState s) {
    switch (s) {
        case JobState::pending: return "pending";
        case JobState::running: return "running";
        case JobState::done: return "done";
        case JobState::failed: return "failed";
    }
    return "unknown";
}

struct MiningJob {
    std::string id;
    JobState state = JobState::pending;
    TimeWindow window;
    MiningConfig config;
    std::string algorithm;
    std::string result_json;  // frozen once done
    std::string result_csv;
    std::string error;
};

class QueueFull : public Error {
public:
    using Error::Error;
};

struct ServiceOptions {
    std::size_t queue_depth = 4;
    std::size_t default_preview_k = 10;
    std::string ui_dir;  // static bundle served at "/", if set
};

/// Backend of the interactive previsualize-then-mine workflow. Holds one
/// immutable TransactionDb; previews run on request threads, mining jobs on
/// a single background worker.
class PreviewService {
public:
    explicit PreviewService(TransactionDb db, ServiceOptions options = {})
        : db_(std::move(db)), options_(std::move(options)),
          worker_([this](std::stop_token stop) { work(stop); }) {}

    ~PreviewService() {
        worker_.request_stop();
        wake_.notify_all();
    }

    PreviewService(const PreviewService&) = delete;
    PreviewService& operator=(const PreviewService&) = delete;

    const TransactionDb& db() const noexcept { return db_; }

    nlohmann::json stats() const {
        nlohmann::json span = nlohmann::json::array();
        if (!db_.empty()) {
            auto w = db_.span();
            span = {format_timestamp(w.start), format_timestamp(w.end)};
        }
        return {{"objects", db_.objects().size()},
                {"records", db_.records().size()},
                {"items", db_.item_count()},
                {"time_span", span}};
    }

    nlohmann::json preview(const TimeWindow& window, std::size_t k) const {
        return preview_to_json(preview_sample(db_, window, k), db_.dictionary());
    }

    /// Enqueues a job; throws QueueFull when `queue_depth` jobs are pending.
    std::string submit(const TimeWindow& window, const MiningConfig& config, const std::string& algorithm) {
        miner_by_name(algorithm);
        std::lock_guard lock(mutex_);
        if (queue_.size() >= options_.queue_depth) throw QueueFull("mining queue is full");
        MiningJob job;
        job.id = "job-" + std::to_string(++next_id_);
        job.window = window;
        job.config = config;
        job.algorithm = algorithm;
        queue_.push_back(job.id);
        auto id = job.id;
        jobs_.emplace(id, std::move(job));
        wake_.notify_one();
        return id;
    }

    std::optional<MiningJob> job(const std::string& id) const {
        std::lock_guard lock(mutex_);
        auto it = jobs_.find(id);
        if (it == jobs_.end()) return std::nullopt;
        return it->second;
    }

    /// Registers the HTTP API (and the static UI, if configured) on `server`.
    void mount(httplib::Server& server) {
        server.Get("/api/stats", [this](const httplib::Request&, httplib::Response& res) {
            send_json(res, 200, stats());
        });

        server.Get("/api/preview", [this](const httplib::Request& req, httplib::Response& res) {
            try {
                auto window = window_from(req.get_param_value("start"), req.get_param_value("end"));
                std::size_t k = options_.default_preview_k;
                if (req.has_param("k")) {
                    auto parsed = as_integer(req.get_param_value("k"));
                    if (!parsed || *parsed < 1) throw InvalidParams("k must be a positive integer");
                    k = static_cast<std::size_t>(*parsed);
                }
                send_json(res, 200, preview(window, k));
            } catch (const Error& e) {
                send_error(res, 400, e.what());
            }
        });

        server.Post("/api/mine", [this](const httplib::Request& req, httplib::Response& res) {
            try {
                auto body = nlohmann::json::parse(req.body);
                if (!body.is_object()) throw InvalidParams("body must be a JSON object");
                auto window = window_from(body.value("start", std::string{}), body.value("end", std::string{}));
                auto config = config_from(body);
                auto algorithm = body.value("algorithm", std::string("rsp"));
                if (algorithm != "rsp" && algorithm != "gsp")
                    throw InvalidParams("algorithm must be 'rsp' or 'gsp'");
                send_json(res, 202, {{"job_id", submit(window, config, algorithm)}});
            } catch (const QueueFull& e) {
                send_error(res, 429, e.what());
            } catch (const nlohmann::json::exception& e) {
                send_error(res, 400, std::string("bad request body: ") + e.what());
            } catch (const Error& e) {
                send_error(res, 400, e.what());
            }
        });

        server.Get(R"(/api/jobs/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            auto j = job(req.matches[1]);
            if (!j) return send_error(res, 404, "unknown job");
            nlohmann::json body = {{"job_id", j->id},
                                   {"state", to_string(j->state)},
                                   {"algorithm", j->algorithm},
                                   {"window", window_to_json(j->window)}};
            if (j->state == JobState::failed) body["error"] = j->error;
            send_json(res, 200, body);
        });

        server.Get(R"(/api/results/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
            auto j = finished_job(req.matches[1], res);
            if (j) res.set_content(j->result_json, "application/json");
        });

        server.Get(R"(/api/results/([^/]+)/csv)", [this](const httplib::Request& req, httplib::Response& res) {
            auto j = finished_job(req.matches[1], res);
            if (j) res.set_content(j->result_csv, "text/csv");
        });

        if (!options_.ui_dir.empty() && server.set_mount_point("/", options_.ui_dir)) return;
        server.Get("/", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(
                "<!doctype html><title>seqmine</title><p>seqmine service is running. "
                "No analyst console bundle is configured; start with --ui &lt;dir&gt; or use /api/*.</p>",
                "text/html");
        });
    }

private:
    static void send_json(httplib::Response& res, int status, const nlohmann::json& body) {
        res.status = status;
        res.set_content(body.dump(), "application/json");
    }

    static void send_error(httplib::Response& res, int status, const std::string& message) {
        send_json(res, status, {{"error", message}});
    }

    static TimeWindow window_from(const std::string& start, const std::string& end) {
        if (start.empty() || end.empty()) throw InvalidParams("start and end are required");
        return TimeWindow::parse(start, end);
    }

    /// min_support: JSON integer >= 1 is a count, JSON float is a fraction in (0, 1].
    static MiningConfig config_from(const nlohmann::json& body) {
        MiningConfig config;
        if (!body.contains("min_support")) throw InvalidParams("min_support is required");
        const auto& s = body["min_support"];
        if (s.is_number_integer() || s.is_number_unsigned()) {
            if (s.get<std::int64_t>() < 1) throw InvalidParams("min_support must be >= 1");
            config.min_support = MinSupport::absolute(s.get<std::uint64_t>());
        } else if (s.is_number_float()) {
            config.min_support = MinSupport::fraction(s.get<double>());
        } else {
            throw InvalidParams("min_support must be a number");
        }
        if (body.contains("max_len") && !body["max_len"].is_null()) {
            const auto& m = body["max_len"];
            if (!m.is_number_integer() || m.get<std::int64_t>() < 1)
                throw InvalidParams("max_len must be a positive integer");
            config.max_pattern_length = m.get<std::size_t>();
        }
        return config;
    }

    std::optional<MiningJob> finished_job(const std::string& id, httplib::Response& res) const {
        auto j = job(id);
        if (!j) {
            send_error(res, 404, "unknown job");
            return std::nullopt;
        }
        if (j->state != JobState::done) {
            nlohmann::json body = {{"error", "job is not done"}, {"state", to_string(j->state)}};
            if (j->state == JobState::failed) body["error"] = j->error;
            send_json(res, 409, body);
            return std::nullopt;
        }
        return j;
    }

    void work(std::stop_token stop) {
        for (;;) {
            std::string id;
            MiningJob snapshot;
            {
                std::unique_lock lock(mutex_);
                wake_.wait(lock, [&] { return stop.stop_requested() || !queue_.empty(); });
                if (stop.stop_requested()) return;
                id = queue_.front();
                queue_.pop_front();
                auto& job = jobs_.at(id);
                job.state = JobState::running;
                snapshot = job;
            }

            std::string json, csv, error;
            try {
                const auto seqs = derive_sequence_db(db_, snapshot.window);
                const auto result = miner_by_name(snapshot.algorithm).run(seqs, snapshot.config);
                json = result_to_json(result).dump();
                std::ostringstream out;
                write_result_csv(out, result);
                csv = out.str();
            } catch (const std::exception& e) {
                error = e.what();
            }

            std::lock_guard lock(mutex_);
            auto& job = jobs_.at(id);
            if (error.empty()) {
                job.result_json = std::move(json);
                job.result_csv = std::move(csv);
                job.state = JobState::done;
            } else {
                job.error = std::move(error);
                job.state = JobState::failed;
            }
        }
    }

    const TransactionDb db_;
    const ServiceOptions options_;
    mutable std::mutex mutex_;
    std::condition_variable_any wake_;
    std::deque<std::string> queue_;
    std::map<std::string, MiningJob> jobs_;
    std::uint64_t next_id_ = 0;
    std::jthread worker_;  // last: joins before the members above are destroyed
};

/// Splits "host:port". Throws InvalidParams on a malformed address.
inline std::pair<std::string, int> parse_bind_address(const std::string& bind) {
    auto colon = bind.rfind(':');
    if (colon == std::string::npos) throw InvalidParams("bind address must be host:port");
    auto port = as_integer(std::string_view(bind).substr(colon + 1));
    if (!port || *port < 0 || *port > 65535) throw InvalidParams("bad port in '" + bind + "'");
    return {bind.substr(0, colon), static_cast<int>(*port)};
}

}  // namespace seqmine
