#include "ramsey/arrowcheck.hpp"
namespace ramsey { template struct ArrowInstance<DirectCategory>; template ArrowResult check_arrow(const ArrowQuery<DualCategory>&, const ArrowOptions&); template ArrowResult check_arrow(const ArrowQuery<DirectCategory>&, const ArrowOptions&); template int min_threshold(const ArrowInstance<DualCategory>&, int, const ArrowOptions&); template WitnessSearch<DualCategory> search_witness<DualCategory>(const FiniteOrder&, const FiniteOrder&, int, int, const GroupFamily&, const std::vector<FiniteOrder>&, const ArrowOptions&);}
