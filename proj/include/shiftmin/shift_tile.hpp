#pragma once

#include "shiftmin/qmc_core.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace shiftmin {

// Malformed tile or probability file. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string const& what, std::size_t line);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class Wrap { strict, toroidal };

// Per-pixel Cranley-Patterson shifts, row-major.
//
// Text format: first line "B width height", then width*height whitespace
// separated decimal mantissas. Every mantissa must be < 2^B.
class ShiftTile {
public:
    ShiftTile(WordSize word, std::size_t width, std::size_t height, std::vector<std::uint64_t> mantissas);

    WordSize word() const noexcept { return word_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::vector<std::uint64_t> const& mantissas() const noexcept { return mantissas_; }

    UnitFixed shift(std::int64_t x, std::int64_t y, Wrap wrap = Wrap::strict) const;

    static ShiftTile parse(std::istream& in);
    static ShiftTile load(std::filesystem::path const& path);
    void write(std::ostream& out) const;
    void save(std::filesystem::path const& path) const;

private:
    WordSize word_;
    std::size_t width_;
    std::size_t height_;
    std::vector<std::uint64_t> mantissas_;
};

inline UnitFixed tile_shift(ShiftTile const& tile, std::int64_t x, std::int64_t y, Wrap wrap = Wrap::strict)
{
    return tile.shift(x, y, wrap);
}

inline ShiftTile tile_load(std::filesystem::path const& path) { return ShiftTile::load(path); }

// Space-time shifts psi(pixel, frame) for multiple samples per index.
// Header "B width height frames", then frames*width*height mantissas,
// frame-major then row-major.
class ShiftTile3D {
public:
    ShiftTile3D(WordSize word, std::size_t width, std::size_t height, std::size_t frames,
                std::vector<std::uint64_t> mantissas);

    WordSize word() const noexcept { return word_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }
    std::size_t frames() const noexcept { return frames_; }

    UnitFixed shift(std::int64_t x, std::int64_t y, std::int64_t frame, Wrap wrap = Wrap::strict) const;

    static ShiftTile3D parse(std::istream& in);
    static ShiftTile3D load(std::filesystem::path const& path);
    void write(std::ostream& out) const;

private:
    WordSize word_;
    std::size_t width_;
    std::size_t height_;
    std::size_t frames_;
    std::vector<std::uint64_t> mantissas_;
};

namespace detail {

// Shared strict reader for the integer text formats: tracks line numbers so
// errors point at the offending token.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    // Next token as an unsigned decimal; throws ParseError on garbage,
    // overflow or end of input. `what` names the field in the message.
    std::uint64_t next_unsigned(char const* what);
    // Throws ParseError if anything but whitespace remains.
    void expect_end();
    std::size_t line() const noexcept { return line_; }

private:
    bool next_token(std::string& token);

    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t last_token_line_ = 1;
};

std::vector<std::uint64_t> read_mantissas(TokenReader& reader, std::size_t count, WordSize word);

} // namespace detail

} // namespace shiftmin
