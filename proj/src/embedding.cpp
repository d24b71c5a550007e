#include "hahn/embedding.hpp"

#include "hahn/models.hpp"

namespace hahn {

bool roundtrip_identity(const FiniteSeries& f)
{
    const HahnModel model(f.group(), f.field());
    const EmbeddingResult r = embed(model, f, Budget{f.size() + 1, std::nullopt});
    return r.exhausted && r.series == f;
}

} // namespace hahn
