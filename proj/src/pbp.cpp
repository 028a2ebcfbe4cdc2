// Explicit instantiations of the process machinery for the three backends.
#include "purebirth/pbp.hpp"

namespace purebirth {

template class PureBirthProcess<Rational>;
template class PureBirthProcess<double>;
template class PureBirthProcess<LogFloat>;

template PureBirthProcess<Rational> make_process<Rational>(std::vector<Rational>);
template PureBirthProcess<double> make_process<double>(std::vector<double>);

template Rational pmf_general<Rational>(const PureBirthProcess<Rational>&, int, long);
template double pmf_general<double>(const PureBirthProcess<double>&, int, long);
template LogFloat pmf_general<LogFloat>(const PureBirthProcess<LogFloat>&, int, long);

template Rational ccdf_general<Rational>(const PureBirthProcess<Rational>&, int, long);
template double ccdf_general<double>(const PureBirthProcess<double>&, int, long);
template LogFloat ccdf_general<LogFloat>(const PureBirthProcess<LogFloat>&, int, long);

template Rational pmf_distinct<Rational>(const PureBirthProcess<Rational>&, int, long, double);
template double pmf_distinct<double>(const PureBirthProcess<double>&, int, long, double);

template Rational cdf_distinct<Rational>(const PureBirthProcess<Rational>&, int, long, double);
template double cdf_distinct<double>(const PureBirthProcess<double>&, int, long, double);

template std::vector<std::vector<Rational>> ccdf_table<Rational>(const PureBirthProcess<Rational>&, long, int);
template std::vector<std::vector<double>> ccdf_table<double>(const PureBirthProcess<double>&, long, int);
template std::vector<std::vector<LogFloat>> ccdf_table<LogFloat>(const PureBirthProcess<LogFloat>&, long, int);

template std::vector<std::vector<Rational>> cdf_table<Rational>(const PureBirthProcess<Rational>&, long, int);
template std::vector<std::vector<double>> cdf_table<double>(const PureBirthProcess<double>&, long, int);

template HittingTimeMoments<Rational> hitting_time_moments<Rational>(const PureBirthProcess<Rational>&, int);
template HittingTimeMoments<double> hitting_time_moments<double>(const PureBirthProcess<double>&, int);

template Rational hitting_time_pmf<Rational>(const PureBirthProcess<Rational>&, int, long);
template double hitting_time_pmf<double>(const PureBirthProcess<double>&, int, long);

}  // namespace purebirth
