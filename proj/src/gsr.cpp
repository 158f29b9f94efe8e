#include "dbgsr/gsr.hpp"

#include <algorithm>
#include <array>

#include "dbgsr/ftg.hpp"
#include "dbgsr/lyndon.hpp"

namespace dbgsr {

namespace {

bool is_top_letter(const Word& x, const Params& p) {
    return x.size() == 1 && x[0] == p.max_symbol();
}

// Two consecutive blocks shorter than n only occur at the wrap k-1 -> 0.
void check_block_pair(bool prev_short, const Word& next, const Params& p) {
    if (prev_short && next.size() < p.n) {
        throw std::logic_error("two consecutive short blocks in the prefer-min sequence");
    }
}

}  // namespace

Word generalized_shift_rule(WordView w, std::uint64_t c, const Params& p) {
    auto [block, out] = filling_the_gap(w, p);
    if (out.size() >= c) {
        out.resize(static_cast<std::size_t>(c));
        return out;
    }
    out.reserve(static_cast<std::size_t>(c) + p.n);
    block.reserve(p.n);
    const Symbol top = p.max_symbol();
    while (out.size() < c) {
        // full-length block not ending in k-1: the successor is a plain increment
        if (block.size() == p.n && block.back() != top) {
            ++block.back();
            if (p.n == 1)
                out.push_back(block[0]);
            else
                out.insert(out.end(), block.begin(), block.end());
            continue;
        }
        const bool prev_short = block.size() < p.n && !is_top_letter(block, p);
        detail::lnext_in_place(block, p);
        check_block_pair(prev_short, block, p);
        if (block.size() == 1)
            out.push_back(block[0]);
        else
            out.insert(out.end(), block.begin(), block.end());
    }
    out.resize(static_cast<std::size_t>(c));
    return out;
}

Word prefer_max_gsr(WordView w, std::uint64_t c, const Params& p) {
    check_symbols(w, p.k);
    return complement(generalized_shift_rule(complement(w, p), c, p), p);
}

Word generalized_shift_rule(WordView w, std::uint64_t c, const Params& p, Variant variant) {
    return variant == Variant::prefer_min ? generalized_shift_rule(w, c, p) : prefer_max_gsr(w, c, p);
}

Symbol shift_rule(WordView w, const Params& p, Variant variant) {
    return generalized_shift_rule(w, 1, p, variant).front();
}

SequenceStream::SequenceStream(const Params& p, Variant variant, std::optional<std::uint64_t> limit)
    : params_(p), variant_(variant), limit_(limit), block_{0} {
    block_.reserve(p.n);
    finished_ = limit_ && *limit_ == 0;
}

void SequenceStream::advance_block() {
    if (is_top_letter(block_, params_)) {
        finished_ = true;
        return;
    }
    const bool prev_short = block_.size() < params_.n;
    detail::lnext_in_place(block_, params_);
    check_block_pair(prev_short, block_, params_);
    offset_ = 0;
}

std::size_t SequenceStream::read(std::span<Symbol> out) {
    std::size_t written = 0;
    const Symbol top = params_.max_symbol();
    while (!finished_ && written < out.size()) {
        std::size_t take = std::min(block_.size() - offset_, out.size() - written);
        if (limit_) take = static_cast<std::size_t>(std::min<std::uint64_t>(take, *limit_ - emitted_));
        auto src = block_.begin() + static_cast<std::ptrdiff_t>(offset_);
        auto dst = out.begin() + static_cast<std::ptrdiff_t>(written);
        if (variant_ == Variant::prefer_min)
            std::copy_n(src, take, dst);
        else
            std::transform(src, src + static_cast<std::ptrdiff_t>(take), dst, [top](Symbol s) { return top - s; });
        offset_ += take;
        written += take;
        emitted_ += take;
        if (limit_ && emitted_ == *limit_) {
            finished_ = true;
        } else if (offset_ == block_.size()) {
            advance_block();
        }
    }
    return written;
}

SequenceStream generate_sequence(const Params& p, Variant variant, std::optional<std::uint64_t> limit) {
    return SequenceStream(p, variant, limit);
}

Word collect(SequenceStream& stream) {
    Word out;
    std::array<Symbol, 4096> chunk{};
    while (std::size_t got = stream.read(chunk)) out.insert(out.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(got));
    return out;
}

}  // namespace dbgsr
