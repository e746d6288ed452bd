#include "wikiqual/io.hpp"

#include <zlib.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <streambuf>
#include <string>

#include "wikiqual/errors.hpp"

namespace wikiqual {

namespace {

class GzStreambuf : public std::streambuf {
public:
    explicit GzStreambuf(const std::filesystem::path& path) {
        file_ = gzopen(path.c_str(), "rb");
        if (file_ == nullptr) throw IoError("cannot open gzip file: " + path.string());
        gzbuffer(file_, 1 << 16);
    }

    ~GzStreambuf() override {
        if (file_ != nullptr) gzclose(file_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        int n = gzread(file_, buf_.data(), static_cast<unsigned>(buf_.size()));
        if (n < 0) {
            int err = 0;
            const char* msg = gzerror(file_, &err);
            throw IoError(std::string("gzip read error: ") + (msg ? msg : "?"));
        }
        if (n == 0) return traits_type::eof();
        setg(buf_.data(), buf_.data(), buf_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_ = nullptr;
    std::array<char, 64 * 1024> buf_{};
};

/// Reads from a subprocess's stdout; used for bzip2, which has no dev
/// library in some environments but ships the tool.
class PipeStreambuf : public std::streambuf {
public:
    explicit PipeStreambuf(const std::string& command) {
        pipe_ = popen(command.c_str(), "r");
        if (pipe_ == nullptr) throw IoError("cannot start: " + command);
    }

    ~PipeStreambuf() override {
        if (pipe_ != nullptr) pclose(pipe_);
    }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        std::size_t n = fread(buf_.data(), 1, buf_.size(), pipe_);
        if (n == 0) {
            if (ferror(pipe_)) throw IoError("decompressor pipe read failed");
            return traits_type::eof();
        }
        setg(buf_.data(), buf_.data(), buf_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    FILE* pipe_ = nullptr;
    std::array<char, 64 * 1024> buf_{};
};

template <typename Buf>
class OwningIstream : public std::istream {
public:
    template <typename... Args>
    explicit OwningIstream(Args&&... args)
        : std::istream(nullptr), buf_(std::forward<Args>(args)...) {
        rdbuf(&buf_);
    }

private:
    Buf buf_;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out.push_back(c);
    }
    out += "'";
    return out;
}

bool has_extension(const std::filesystem::path& path, std::string_view ext) {
    return path.extension() == ext;
}

}  // namespace

std::unique_ptr<std::istream> open_input(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec) || ec) {
        throw IoError("cannot open input: " + path.string() + " (no such file)");
    }
    if (has_extension(path, ".gz")) {
        return std::make_unique<OwningIstream<GzStreambuf>>(path);
    }
    if (has_extension(path, ".bz2")) {
        return std::make_unique<OwningIstream<PipeStreambuf>>(
            "bzip2 -dc " + shell_quote(path.string()));
    }
    auto stream = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!stream->is_open()) throw IoError("cannot open input: " + path.string());
    return stream;
}

}  // namespace wikiqual
