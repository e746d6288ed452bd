#include "wikiqual/pipeline.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

#include "wikiqual/csv.hpp"
#include "wikiqual/dump.hpp"
#include "wikiqual/extractor.hpp"

namespace wikiqual {

namespace {

bool timestamp_in_range(const std::string& ts, const ExtractOptions& opt) {
    if (!opt.since.empty() && ts.compare(0, opt.since.size(), opt.since) < 0)
        return false;
    if (!opt.until.empty() && ts.compare(0, opt.until.size(), opt.until) > 0)
        return false;
    return true;
}

/// Decides what to do with one revision and updates the page-level stats.
/// Returns true when the revision should be extracted.
class RevisionFilter {
public:
    explicit RevisionFilter(const ExtractOptions& opt, ExtractStats& stats)
        : opt_(opt), stats_(stats) {}

    bool keep(const RevisionEvent& ev) {
        if (ev.page.page_id != current_page_ || !seen_any_) {
            seen_any_ = true;
            current_page_ = ev.page.page_id;
            ++stats_.pages_seen;
            page_is_article_ = true;
            if (ev.page.ns != 0) {
                ++stats_.pages_skipped_namespace;
                page_is_article_ = false;
            } else if (ev.page.redirect) {
                ++stats_.pages_skipped_redirect;
                page_is_article_ = false;
            }
        }
        ++stats_.revisions_seen;
        if (!page_is_article_) return false;
        if (!timestamp_in_range(ev.timestamp, opt_)) {
            ++stats_.revisions_skipped_time;
            return false;
        }
        if (looks_like_redirect(ev.text)) {
            ++stats_.revisions_skipped_redirect;
            return false;
        }
        return true;
    }

private:
    const ExtractOptions& opt_;
    ExtractStats& stats_;
    std::uint64_t current_page_ = 0;
    bool seen_any_ = false;
    bool page_is_article_ = true;
};

ExtractStats extract_single(std::istream& dump, std::ostream& csv,
                            const ExtractOptions& opt) {
    ExtractStats stats;
    RevisionFilter filter(opt, stats);
    DumpReader reader(dump);
    FeaturesCsvWriter writer(csv);
    RevisionEvent ev;
    while (reader.next(ev)) {
        if (!filter.keep(ev)) continue;
        RevisionRecord record;
        record.revision_id = ev.revision_id;
        record.page_id = ev.page.page_id;
        record.timestamp = ev.timestamp;
        record.features = extract_features(ev.text, opt.locale);
        writer.write(record);
    }
    stats.revisions_written = writer.rows();
    return stats;
}

struct WorkItem {
    std::uint64_t seq = 0;
    std::uint64_t revision_id = 0;
    std::uint64_t page_id = 0;
    std::string timestamp;
    std::string text;
};

struct PipelineState {
    const ExtractOptions& opt;

    std::mutex queue_mu;
    std::condition_variable queue_can_push;
    std::condition_variable queue_can_pop;
    std::deque<WorkItem> queue;
    std::size_t queue_bytes = 0;
    bool queue_closed = false;
    bool aborted = false;

    std::mutex out_mu;
    std::condition_variable out_cv;
    std::map<std::uint64_t, RevisionRecord> pending;
    bool workers_done = false;
    std::exception_ptr writer_error;

    explicit PipelineState(const ExtractOptions& o) : opt(o) {}

    void push(WorkItem item) {
        std::unique_lock lock(queue_mu);
        queue_can_push.wait(lock, [&] {
            return aborted ||
                   (queue.size() < opt.max_queue_items &&
                    queue_bytes < opt.max_queue_bytes);
        });
        if (aborted) return;
        queue_bytes += item.text.size();
        queue.push_back(std::move(item));
        queue_can_pop.notify_one();
    }

    bool pop(WorkItem& item) {
        std::unique_lock lock(queue_mu);
        queue_can_pop.wait(lock, [&] { return !queue.empty() || queue_closed; });
        if (queue.empty()) return false;
        item = std::move(queue.front());
        queue.pop_front();
        queue_bytes -= item.text.size();
        queue_can_push.notify_one();
        return true;
    }

    void close_queue() {
        std::lock_guard lock(queue_mu);
        queue_closed = true;
        queue_can_pop.notify_all();
    }

    void abort() {
        {
            std::lock_guard lock(queue_mu);
            aborted = true;
            queue.clear();
            queue_bytes = 0;
            queue_closed = true;
        }
        queue_can_push.notify_all();
        queue_can_pop.notify_all();
    }
};

void worker_main(PipelineState& state, const LocaleConfig& locale) {
    WorkItem item;
    while (state.pop(item)) {
        RevisionRecord record;
        record.revision_id = item.revision_id;
        record.page_id = item.page_id;
        record.timestamp = std::move(item.timestamp);
        record.features = extract_features(item.text, locale);
        std::lock_guard lock(state.out_mu);
        state.pending.emplace(item.seq, std::move(record));
        state.out_cv.notify_all();
    }
}

void writer_main(PipelineState& state, std::ostream& csv, std::uint64_t& rows_out) {
    try {
        FeaturesCsvWriter writer(csv);
        std::uint64_t next_seq = 0;
        while (true) {
            RevisionRecord record;
            {
                std::unique_lock lock(state.out_mu);
                state.out_cv.wait(lock, [&] {
                    return state.pending.count(next_seq) != 0 ||
                           (state.workers_done && state.pending.empty());
                });
                auto it = state.pending.find(next_seq);
                if (it == state.pending.end()) break;  // drained and done
                record = std::move(it->second);
                state.pending.erase(it);
            }
            writer.write(record);
            ++next_seq;
        }
        rows_out = writer.rows();
    } catch (...) {
        {
            std::lock_guard lock(state.out_mu);
            state.writer_error = std::current_exception();
        }
        state.abort();
    }
}

ExtractStats extract_parallel(std::istream& dump, std::ostream& csv,
                              const ExtractOptions& opt) {
    PipelineState state(opt);
    std::uint64_t rows_written = 0;

    std::vector<std::thread> workers;
    const int worker_count = opt.threads;  // plus the reader and the writer
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int i = 0; i < worker_count; ++i) {
        workers.emplace_back(worker_main, std::ref(state), std::cref(opt.locale));
    }
    std::thread writer(writer_main, std::ref(state), std::ref(csv),
                       std::ref(rows_written));

    ExtractStats stats;
    std::exception_ptr reader_error;
    try {
        RevisionFilter filter(opt, stats);
        DumpReader reader(dump);
        RevisionEvent ev;
        std::uint64_t seq = 0;
        while (reader.next(ev)) {
            if (!filter.keep(ev)) continue;
            {
                std::lock_guard lock(state.queue_mu);
                if (state.aborted) break;
            }
            WorkItem item;
            item.seq = seq++;
            item.revision_id = ev.revision_id;
            item.page_id = ev.page.page_id;
            item.timestamp = std::move(ev.timestamp);
            item.text = std::move(ev.text);
            state.push(std::move(item));
        }
    } catch (...) {
        reader_error = std::current_exception();
    }

    state.close_queue();
    for (auto& w : workers) w.join();
    {
        std::lock_guard lock(state.out_mu);
        state.workers_done = true;
        state.out_cv.notify_all();
    }
    writer.join();

    if (reader_error) std::rethrow_exception(reader_error);
    if (state.writer_error) std::rethrow_exception(state.writer_error);

    stats.revisions_written = rows_written;
    return stats;
}

}  // namespace

ExtractStats extract_to_csv(std::istream& dump, std::ostream& csv,
                            const ExtractOptions& options) {
    if (options.threads <= 1) return extract_single(dump, csv, options);
    return extract_parallel(dump, csv, options);
}

}  // namespace wikiqual
