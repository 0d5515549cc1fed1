#include "adpt/motio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <string_view>

namespace adpt {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
    throw DataError(path.string() + ":" + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

template <class T>
bool parse_number(std::string_view s, T& out) {
    const char* end = s.data() + s.size();
    // from_chars rejects a leading '+'.
    const char* begin = (!s.empty() && s.front() == '+') ? s.data() + 1 : s.data();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && !s.empty();
}

/// Reads non-blank lines, handing each one's fields and line number to `fn`.
template <class Fn>
void for_each_record(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open " + path.string());
    }
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (trim(line).empty()) {
            continue;
        }
        fn(split_fields(line), number);
    }
}

struct BoxLine {
    int frame;
    int id;
    BoundingBox bbox;
    double conf;
};

BoxLine parse_box_line(const std::vector<std::string_view>& f, const std::filesystem::path& path, std::size_t line,
                       std::size_t min_fields) {
    if (f.size() < min_fields) {
        fail(path, line, "expected at least " + std::to_string(min_fields) + " comma-separated fields");
    }
    int frame = 0;
    double id = 0.0;
    double v[4];
    if (!parse_number(f[0], frame)) fail(path, line, "malformed frame index");
    if (!parse_number(f[1], id) || id != std::floor(id)) fail(path, line, "malformed id");
    for (int k = 0; k < 4; ++k) {
        if (!parse_number(f[2 + static_cast<std::size_t>(k)], v[k])) fail(path, line, "malformed box coordinate");
    }
    double conf = 1.0;
    if (f.size() > 6 && !parse_number(f[6], conf)) fail(path, line, "malformed confidence");
    if (frame < 0) fail(path, line, "negative frame index");
    if (!(v[2] > 0.0) || !(v[3] > 0.0)) fail(path, line, "width and height must be positive");
    try {
        return {frame, static_cast<int>(id), BoundingBox(v[0], v[1], v[2], v[3]), conf};
    } catch (const std::invalid_argument& e) {
        fail(path, line, e.what());
    }
}

std::string fmt_g6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fmt_exact(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw DataError("cannot write " + path.string());
    }
    return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw DataError("write failed: " + path.string());
    }
}

}  // namespace

const FeatureVec& FeatureTable::at(int frame, int det_index) const {
    const auto it = rows.find({frame, det_index});
    if (it == rows.end()) {
        throw DataError("no feature row for (frame " + std::to_string(frame) + ", det " + std::to_string(det_index) +
                        ")");
    }
    return it->second;
}

std::vector<RawFrame> read_detections(const std::filesystem::path& path) {
    std::map<int, std::vector<DetRecord>> by_frame;
    for_each_record(path, [&](const auto& fields, std::size_t line) {
        const BoxLine b = parse_box_line(fields, path, line, 7);
        if (!(b.conf >= 0.0 && b.conf <= 1.0)) {
            fail(path, line, "confidence outside [0,1]");
        }
        by_frame[b.frame].push_back({b.bbox, b.conf});
    });
    std::vector<RawFrame> out;
    if (by_frame.empty()) {
        return out;
    }
    const int first = std::min(1, by_frame.begin()->first);
    const int last = by_frame.rbegin()->first;
    for (int f = first; f <= last; ++f) {
        auto it = by_frame.find(f);
        out.push_back({f, it == by_frame.end() ? std::vector<DetRecord>{} : std::move(it->second)});
    }
    return out;
}

std::vector<LabeledBox> read_gt(const std::filesystem::path& path) {
    std::vector<LabeledBox> out;
    std::set<std::pair<int, int>> seen;
    for_each_record(path, [&](const auto& fields, std::size_t line) {
        const BoxLine b = parse_box_line(fields, path, line, 6);
        if (b.id < 1) {
            fail(path, line, "id must be >= 1");
        }
        if (!seen.emplace(b.frame, b.id).second) {
            fail(path, line, "duplicate (frame, id)");
        }
        out.push_back({b.frame, b.id, b.bbox});
    });
    return out;
}

FeatureTable read_features(const std::filesystem::path& path, std::span<const RawFrame> dets) {
    FeatureTable table;
    bool header_seen = false;
    for_each_record(path, [&](const auto& f, std::size_t line) {
        if (!header_seen) {
            header_seen = true;
            if (f.size() != 3 || f[0] != "frame" || f[1] != "det" || !f[2].starts_with("dim=") ||
                !parse_number(f[2].substr(4), table.dim) || table.dim < 2) {
                fail(path, line, "expected header \"frame,det,dim=D\" with D >= 2");
            }
            return;
        }
        if (f.size() != static_cast<std::size_t>(table.dim) + 2) {
            fail(path, line, "dimension mismatch: expected " + std::to_string(table.dim) + " values");
        }
        int frame = 0, det = 0;
        if (!parse_number(f[0], frame) || !parse_number(f[1], det) || det < 0) {
            fail(path, line, "malformed frame/det index");
        }
        std::vector<double> v(static_cast<std::size_t>(table.dim));
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!parse_number(f[k + 2], v[k])) fail(path, line, "malformed feature value");
        }
        try {
            if (!table.rows.emplace(std::pair{frame, det}, FeatureVec(std::move(v))).second) {
                fail(path, line, "duplicate feature row");
            }
        } catch (const std::invalid_argument& e) {
            fail(path, line, e.what());
        }
    });
    if (!header_seen) {
        throw DataError(path.string() + ": missing header");
    }

    std::size_t expected = 0;
    for (const RawFrame& frame : dets) {
        for (std::size_t j = 0; j < frame.detections.size(); ++j) {
            if (!table.rows.contains({frame.index, static_cast<int>(j)})) {
                throw DataError(path.string() + ": missing feature for (frame " + std::to_string(frame.index) +
                                ", det " + std::to_string(j) + ")");
            }
        }
        expected += frame.detections.size();
    }
    if (table.rows.size() != expected) {
        throw DataError(path.string() + ": feature rows without a matching detection");
    }
    return table;
}

std::vector<FrameData> attach_features(std::span<const RawFrame> dets, const FeatureTable& features) {
    std::vector<FrameData> out;
    out.reserve(dets.size());
    for (const RawFrame& raw : dets) {
        FrameData frame;
        frame.index = raw.index;
        for (std::size_t j = 0; j < raw.detections.size(); ++j) {
            const DetRecord& d = raw.detections[j];
            frame.detections.emplace_back(raw.index, d.bbox, features.at(raw.index, static_cast<int>(j)), d.confidence);
        }
        out.push_back(std::move(frame));
    }
    return out;
}

std::vector<FrameData> load_sequence(const std::filesystem::path& det_path,
                                     const std::filesystem::path& feature_path) {
    const auto raw = read_detections(det_path);
    const auto table = read_features(feature_path, raw);
    return attach_features(raw, table);
}

void write_results(const std::filesystem::path& path, std::span<const TrackedBox> boxes) {
    std::vector<TrackedBox> sorted(boxes.begin(), boxes.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const TrackedBox& a, const TrackedBox& b) {
        return std::pair{a.frame, a.track_id} < std::pair{b.frame, b.track_id};
    });
    auto out = open_out(path);
    for (const TrackedBox& b : sorted) {
        out << b.frame << ',' << b.track_id << ',' << fmt_g6(b.bbox.left()) << ',' << fmt_g6(b.bbox.top()) << ','
            << fmt_g6(b.bbox.width()) << ',' << fmt_g6(b.bbox.height()) << ',' << fmt_g6(b.confidence)
            << ",-1,-1,-1\n";
    }
    close_checked(out, path);
}

void write_detections(const std::filesystem::path& path, std::span<const FrameData> frames) {
    auto out = open_out(path);
    for (const FrameData& frame : frames) {
        for (const Detection& d : frame.detections) {
            out << frame.index << ",-1," << fmt_exact(d.bbox.left()) << ',' << fmt_exact(d.bbox.top()) << ','
                << fmt_exact(d.bbox.width()) << ',' << fmt_exact(d.bbox.height()) << ','
                << fmt_exact(d.confidence) << ",-1,-1,-1\n";
        }
    }
    close_checked(out, path);
}

void write_features(const std::filesystem::path& path, std::span<const FrameData> frames) {
    auto out = open_out(path);
    const std::size_t dim = [&]() -> std::size_t {
        for (const FrameData& f : frames) {
            if (!f.detections.empty()) return f.detections.front().feature.dim();
        }
        return 2;
    }();
    out << "frame,det,dim=" << dim << '\n';
    char buf[64];
    for (const FrameData& frame : frames) {
        for (std::size_t j = 0; j < frame.detections.size(); ++j) {
            out << frame.index << ',' << j;
            for (double v : frame.detections[j].feature.values()) {
                std::snprintf(buf, sizeof buf, ",%.9g", v);
                out << buf;
            }
            out << '\n';
        }
    }
    close_checked(out, path);
}

void write_gt(const std::filesystem::path& path, std::span<const LabeledBox> gt) {
    auto out = open_out(path);
    for (const LabeledBox& b : gt) {
        out << b.frame << ',' << b.id << ',' << fmt_exact(b.bbox.left()) << ',' << fmt_exact(b.bbox.top()) << ','
            << fmt_exact(b.bbox.width()) << ',' << fmt_exact(b.bbox.height()) << ",1,1,1\n";
    }
    close_checked(out, path);
}

}  // namespace adpt
