#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "dbgsr/word.hpp"

namespace dbgsr {

enum class Variant { prefer_min, prefer_max };

/// The c symbols that follow the n-word w in the cyclic prefer-min
/// sequence. c may exceed k^n, in which case the output wraps around.
/// O(n + c).
Word generalized_shift_rule(WordView w, std::uint64_t c, const Params& p);

/// Same as generalized_shift_rule for the prefer-max sequence, obtained by
/// complementing input and output.
Word prefer_max_gsr(WordView w, std::uint64_t c, const Params& p);

Word generalized_shift_rule(WordView w, std::uint64_t c, const Params& p, Variant variant);

/// The single symbol after w (c = 1).
Symbol shift_rule(WordView w, const Params& p, Variant variant = Variant::prefer_min);

/// Streams the prefer-min (or prefer-max) sequence block by block, starting
/// at 0^n (or (k-1)^n). Holds O(n) state. Without a limit it stops after
/// one full period, detected when the block k-1 has been emitted; with a
/// limit it stops after min(limit, k^n) symbols. Single consumer.
class SequenceStream {
public:
    explicit SequenceStream(const Params& p, Variant variant = Variant::prefer_min,
                            std::optional<std::uint64_t> limit = std::nullopt);

    /// Writes up to out.size() next symbols; returns the count written,
    /// which is 0 only once the stream is exhausted.
    std::size_t read(std::span<Symbol> out);

    bool done() const noexcept { return finished_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

private:
    void advance_block();

    Params params_;
    Variant variant_;
    std::optional<std::uint64_t> limit_;
    Word block_;
    std::size_t offset_ = 0;
    std::uint64_t emitted_ = 0;
    bool finished_ = false;
};

SequenceStream generate_sequence(const Params& p, Variant variant = Variant::prefer_min,
                                 std::optional<std::uint64_t> limit = std::nullopt);

/// Drains a stream into a word. Only sensible for small k^n or a limit.
Word collect(SequenceStream& stream);

}  // namespace dbgsr
