// Generated from the printed degree-12 structure function; columns are
// (power of s, integer coefficient, [K, alpha, beta, gamma, delta, epsilon, zeta, lambda, mu, nu, xi, tau]).

pub(crate) static TERMS: &[(u8, i64, [u8; 12])] = &[
    (0, 61440, [0, 0, 0, 0, 6, 0, 0, 0, 0, 0, 0, 2]),
    (0, -92160, [0, 0, 2, 0, 5, 0, 0, 0, 0, 0, 0, 2]),
    (0, 491520, [0, 0, 2, 1, 4, 0, 0, 0, 0, 0, 0, 1]),
    (0, -983040, [0, 0, 3, 0, 3, 1, 0, 0, 0, 0, 0, 1]),
    (0, -12288, [0, 0, 3, 0, 5, 0, 0, 1, 0, 0, 0, 0]),
    (0, -311040, [0, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 2]),
    (0, 30720, [0, 0, 4, 0, 4, 0, 0, 0, 1, 0, 0, 0]),
    (0, -491520, [0, 0, 4, 1, 3, 0, 0, 0, 0, 0, 0, 1]),
    (0, 983040, [0, 0, 4, 2, 2, 0, 0, 0, 0, 0, 0, 0]),
    (0, 737280, [0, 0, 5, 0, 2, 1, 0, 0, 0, 0, 0, 1]),
    (0, -81920, [0, 0, 5, 0, 3, 0, 0, 0, 0, 1, 0, 0]),
    (0, -128000, [0, 0, 5, 0, 4, 0, 0, 1, 0, 0, 0, 0]),
    (0, -3932160, [0, 0, 5, 1, 1, 1, 0, 0, 0, 0, 0, 0]),
    (0, 3932160, [0, 0, 6, 0, 0, 2, 0, 0, 0, 0, 0, 0]),
    (0, 245760, [0, 0, 6, 0, 2, 0, 0, 0, 0, 0, 1, 0]),
    (0, -264960, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (0, 10240, [0, 0, 6, 0, 3, 0, 0, 0, 1, 0, 0, 0]),
    (0, -184320, [0, 0, 6, 1, 2, 0, 0, 0, 0, 0, 0, 1]),
    (0, -491520, [0, 0, 6, 2, 1, 0, 0, 0, 0, 0, 0, 0]),
    (0, -983040, [0, 0, 7, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (0, 552960, [0, 0, 7, 0, 1, 1, 0, 0, 0, 0, 0, 1]),
    (0, -20480, [0, 0, 7, 0, 2, 0, 0, 0, 0, 1, 0, 0]),
    (0, -50688, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (0, 983040, [0, 0, 7, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (0, -122880, [0, 0, 8, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
    (0, -115440, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (0, 6400, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (0, 153600, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (0, -184320, [0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (0, 245760, [0, 0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (0, 322560, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (0, 46080, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (0, 3968, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (0, -46080, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (0, 5400, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (0, -17280, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (0, 40320, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (0, 11520, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (0, -10608, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (0, 5535, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (0, -4680, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (0, -3204, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (0, -245760, [0, 1, 1, 0, 5, 0, 0, 0, 0, 0, 0, 1]),
    (0, 307200, [0, 1, 3, 0, 4, 0, 0, 0, 0, 0, 0, 1]),
    (0, -983040, [0, 1, 3, 1, 3, 0, 0, 0, 0, 0, 0, 0]),
    (0, 1966080, [0, 1, 4, 0, 2, 1, 0, 0, 0, 0, 0, 0]),
    (0, 92160, [0, 1, 5, 0, 3, 0, 0, 0, 0, 0, 0, 1]),
    (0, 737280, [0, 1, 5, 1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (0, -983040, [0, 1, 6, 0, 1, 1, 0, 0, 0, 0, 0, 0]),
    (0, -23040, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (0, 61440, [0, 1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (0, -368640, [0, 1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (0, -66240, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (0, -46080, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (0, -15120, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (0, 245760, [0, 2, 2, 0, 4, 0, 0, 0, 0, 0, 0, 0]),
    (0, -245760, [0, 2, 4, 0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (0, -30720, [0, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (0, 46080, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (0, 8640, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (0, -983040, [1, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 368640, [0, 0, 2, 0, 5, 0, 0, 0, 0, 0, 0, 2]),
    (1, 49152, [0, 0, 3, 0, 5, 0, 0, 1, 0, 0, 0, 0]),
    (1, 1013760, [0, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 2]),
    (1, -122880, [0, 0, 4, 0, 4, 0, 0, 0, 1, 0, 0, 0]),
    (1, 1966080, [0, 0, 4, 1, 3, 0, 0, 0, 0, 0, 0, 1]),
    (1, -2949120, [0, 0, 5, 0, 2, 1, 0, 0, 0, 0, 0, 1]),
    (1, 327680, [0, 0, 5, 0, 3, 0, 0, 0, 0, 1, 0, 0]),
    (1, 450560, [0, 0, 5, 0, 4, 0, 0, 1, 0, 0, 0, 0]),
    (1, -983040, [0, 0, 6, 0, 2, 0, 0, 0, 0, 0, 1, 0]),
    (1, 844800, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (1, 81920, [0, 0, 6, 0, 3, 0, 0, 0, 1, 0, 0, 0]),
    (1, 1966080, [0, 0, 6, 2, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, 3932160, [0, 0, 7, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (1, -1474560, [0, 0, 7, 0, 1, 1, 0, 0, 0, 0, 0, 1]),
    (1, -163840, [0, 0, 7, 0, 2, 0, 0, 0, 0, 1, 0, 0]),
    (1, 141312, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (1, -3932160, [0, 0, 7, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, 983040, [0, 0, 8, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
    (1, 372480, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (1, 66560, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (1, -1105920, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (1, 491520, [0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, -1966080, [0, 0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (1, -675840, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (1, -307200, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (1, -38912, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (1, 307200, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (1, -38880, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (1, 92160, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (1, -245760, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (1, -61440, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (1, 38592, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (1, -23400, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (1, 20640, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (1, 12576, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (1, -1228800, [0, 1, 3, 0, 4, 0, 0, 0, 0, 0, 0, 1]),
    (1, 245760, [0, 1, 5, 0, 3, 0, 0, 0, 0, 0, 0, 1]),
    (1, -2949120, [0, 1, 5, 1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (1, 3932160, [0, 1, 6, 0, 1, 1, 0, 0, 0, 0, 0, 0]),
    (1, 522240, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (1, 491520, [0, 1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, 983040, [0, 1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (1, 384000, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (1, 307200, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 72000, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (1, 983040, [0, 2, 4, 0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (1, -245760, [0, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (1, -307200, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (1, -46080, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (1, 3932160, [1, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, -368640, [0, 0, 2, 0, 5, 0, 0, 0, 0, 0, 0, 2]),
    (2, -49152, [0, 0, 3, 0, 5, 0, 0, 1, 0, 0, 0, 0]),
    (2, -92160, [0, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 2]),
    (2, 122880, [0, 0, 4, 0, 4, 0, 0, 0, 1, 0, 0, 0]),
    (2, -1966080, [0, 0, 4, 1, 3, 0, 0, 0, 0, 0, 0, 1]),
    (2, 2949120, [0, 0, 5, 0, 2, 1, 0, 0, 0, 0, 0, 1]),
    (2, -327680, [0, 0, 5, 0, 3, 0, 0, 0, 0, 1, 0, 0]),
    (2, -204800, [0, 0, 5, 0, 4, 0, 0, 1, 0, 0, 0, 0]),
    (2, 983040, [0, 0, 6, 0, 2, 0, 0, 0, 0, 0, 1, 0]),
    (2, 814080, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (2, -573440, [0, 0, 6, 0, 3, 0, 0, 0, 1, 0, 0, 0]),
    (2, 2949120, [0, 0, 6, 1, 2, 0, 0, 0, 0, 0, 0, 1]),
    (2, -1966080, [0, 0, 6, 2, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, -3932160, [0, 0, 7, 0, 1, 0, 1, 0, 0, 0, 0, 0]),
    (2, -1474560, [0, 0, 7, 0, 1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 1146880, [0, 0, 7, 0, 2, 0, 0, 0, 0, 1, 0, 0]),
    (2, 473088, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (2, 3932160, [0, 0, 7, 1, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, -2949120, [0, 0, 8, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
    (2, 433920, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (2, -250880, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (2, 2580480, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 491520, [0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 5898240, [0, 0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (2, -1536000, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (2, 552960, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (2, 346112, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (2, -552960, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (2, 96480, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (2, -30720, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (2, 307200, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 20480, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (2, 72512, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (2, -21000, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (2, 19040, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (2, 18976, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (2, 1228800, [0, 1, 3, 0, 4, 0, 0, 0, 0, 0, 0, 1]),
    (2, -2703360, [0, 1, 5, 0, 3, 0, 0, 0, 0, 0, 0, 1]),
    (2, 2949120, [0, 1, 5, 1, 2, 0, 0, 0, 0, 0, 0, 0]),
    (2, -3932160, [0, 1, 6, 0, 1, 1, 0, 0, 0, 0, 0, 0]),
    (2, -1628160, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (2, -3440640, [0, 1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 983040, [0, 1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (2, -353280, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, -552960, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, 27840, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, -983040, [0, 2, 4, 0, 3, 0, 0, 0, 0, 0, 0, 0]),
    (2, 1720320, [0, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (2, 552960, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (2, 15360, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (2, -3932160, [1, 0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, -1843200, [0, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 2]),
    (3, -491520, [0, 0, 5, 0, 4, 0, 0, 1, 0, 0, 0, 0]),
    (3, -4300800, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (3, 983040, [0, 0, 6, 0, 3, 0, 0, 0, 1, 0, 0, 0]),
    (3, -5898240, [0, 0, 6, 1, 2, 0, 0, 0, 0, 0, 0, 1]),
    (3, 5898240, [0, 0, 7, 0, 1, 1, 0, 0, 0, 0, 0, 1]),
    (3, -1966080, [0, 0, 7, 0, 2, 0, 0, 0, 0, 1, 0, 0]),
    (3, -1720320, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (3, 3932160, [0, 0, 8, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
    (3, -1981440, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (3, -368640, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (3, -983040, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, -1966080, [0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, -7864320, [0, 0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (3, 3440640, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (3, 491520, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (3, -860160, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (3, -491520, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (3, 69120, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (3, -614400, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (3, 860160, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 409600, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (3, -367616, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (3, 204000, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (3, -197120, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (3, -120448, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (3, 4915200, [0, 1, 5, 0, 3, 0, 0, 0, 0, 0, 0, 1]),
    (3, -245760, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (3, 5898240, [0, 1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (3, -3932160, [0, 1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (3, -1781760, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, -491520, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (3, -599040, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, -2949120, [0, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (3, 491520, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (3, 307200, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (4, 921600, [0, 0, 4, 0, 4, 0, 0, 0, 0, 0, 0, 2]),
    (4, 245760, [0, 0, 5, 0, 4, 0, 0, 1, 0, 0, 0, 0]),
    (4, 1290240, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (4, -491520, [0, 0, 6, 0, 3, 0, 0, 0, 1, 0, 0, 0]),
    (4, 2949120, [0, 0, 6, 1, 2, 0, 0, 0, 0, 0, 0, 1]),
    (4, -2949120, [0, 0, 7, 0, 1, 1, 0, 0, 0, 0, 0, 1]),
    (4, 983040, [0, 0, 7, 0, 2, 0, 0, 0, 0, 1, 0, 0]),
    (4, 614400, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (4, -1966080, [0, 0, 8, 0, 1, 0, 0, 0, 0, 0, 1, 0]),
    (4, -1313280, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (4, 2027520, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (4, -4423680, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (4, 983040, [0, 0, 8, 2, 0, 0, 0, 0, 0, 0, 0, 0]),
    (4, 3932160, [0, 0, 9, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
    (4, 737280, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (4, -2703360, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (4, -307200, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (4, 2703360, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (4, -933120, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (4, 1044480, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (4, -2396160, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, -696320, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (4, -77312, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (4, -150000, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (4, 136960, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (4, 12608, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (4, -2457600, [0, 1, 5, 0, 3, 0, 0, 0, 0, 0, 0, 1]),
    (4, 6266880, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (4, -2949120, [0, 1, 7, 1, 1, 0, 0, 0, 0, 0, 0, 0]),
    (4, 1966080, [0, 1, 8, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    (4, 3962880, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (4, 2703360, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (4, 622080, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (4, 1474560, [0, 2, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
    (4, -2703360, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (4, -522240, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 3686400, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (5, 1474560, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (5, 6819840, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (5, -2211840, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (5, 5898240, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (5, -2949120, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (5, 2949120, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (5, 2457600, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (5, -2949120, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (5, 1428480, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (5, 491520, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (5, 983040, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, -327680, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (5, 1165312, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (5, -441600, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (5, 547840, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (5, 373760, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (5, -7372800, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (5, -245760, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (5, -2949120, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (5, 1259520, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 2949120, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (5, -245760, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (6, -1228800, [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 2]),
    (6, -491520, [0, 0, 7, 0, 3, 0, 0, 1, 0, 0, 0, 0]),
    (6, -2396160, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (6, 737280, [0, 0, 8, 0, 2, 0, 0, 0, 1, 0, 0, 0]),
    (6, -1966080, [0, 0, 8, 1, 1, 0, 0, 0, 0, 0, 0, 1]),
    (6, 983040, [0, 0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 1]),
    (6, -983040, [0, 0, 9, 0, 1, 0, 0, 0, 0, 1, 0, 0]),
    (6, -491520, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (6, 983040, [0, 0, 10, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
    (6, 1428480, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (6, -2457600, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (6, 1966080, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (6, 1638400, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (6, -161792, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (6, 764160, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (6, -803840, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (6, -185344, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (6, 2457600, [0, 1, 7, 0, 2, 0, 0, 0, 0, 0, 0, 1]),
    (6, -5652480, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (6, 983040, [0, 1, 9, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    (6, -2426880, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (6, -983040, [0, 2, 8, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
    (6, 1228800, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (7, -3686400, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (7, -1966080, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (7, -4792320, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (7, 1966080, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (7, -1966080, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, -1310720, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (7, -1556480, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (7, -291840, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (7, -204800, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (7, -446464, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (7, 4915200, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (7, 245760, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, -983040, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (8, 921600, [0, 0, 8, 0, 2, 0, 0, 0, 0, 0, 0, 2]),
    (8, 491520, [0, 0, 9, 0, 2, 0, 0, 1, 0, 0, 0, 0]),
    (8, 1751040, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (8, -491520, [0, 0, 10, 0, 1, 0, 0, 0, 1, 0, 0, 0]),
    (8, 491520, [0, 0, 10, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 327680, [0, 0, 11, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    (8, 20480, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (8, -618240, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (8, 972800, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (8, 123904, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (8, -1228800, [0, 1, 9, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (8, 1781760, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (8, 245760, [0, 2, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    (9, 1843200, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (9, 1228800, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (9, 1259520, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (9, -614400, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (9, 368640, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (9, -1228800, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (10, -368640, [0, 0, 10, 0, 1, 0, 0, 0, 0, 0, 0, 2]),
    (10, -245760, [0, 0, 11, 0, 1, 0, 0, 1, 0, 0, 0, 0]),
    (10, -460800, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (10, 122880, [0, 0, 12, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
    (10, 73728, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (10, 245760, [0, 1, 11, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (11, -368640, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (11, -294912, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    (12, 61440, [0, 0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 2]),
    (12, 49152, [0, 0, 13, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
];
