//! Frozen reference values for the statistics oracle tests, computed with
//! an independent reference statistics implementation before the library
//! was written.

#![allow(clippy::excessive_precision)]
#![allow(dead_code)]

// Welch t-test reference fixtures: (x, y, t, p) computed with an
// independent reference statistics implementation.
pub const WELCH_FIXTURES: &[(&[f64], &[f64], f64, f64)] = &[
    (&[1.0, 2.0, 3.0, 4.0, 5.0], &[2.0, 3.0, 4.0, 5.0, 6.0], -1.0, 0.34659350708733416),
    (&[-3.222132, -0.614746, -2.258691, -2.076677, -2.165554, 0.606027, 0.519903, 0.311325], &[-9.933105, -4.053412, 1.031137, -4.937861, -3.900409, -1.081635, -2.168057, -1.535022, -3.958318], 1.972609407490467, 0.07231965809906378),
    (&[3.869799, 6.814163, 4.029186, 1.892563, 5.736419, 4.191406, 4.528517, 1.400876, 3.376951, 4.206191], &[2.6955, -0.567062, -1.800738, -1.680158, 4.781667], 2.368938561139374, 0.061810317535612176),
    (&[-4.134867, -0.090132, -3.75919, 1.8644, -4.384504, -1.357315, 0.639765, -5.677771, 3.15163, 0.384929, 0.194516], &[4.461771, 5.017088, 3.280599, 3.555749, 4.960297], -5.8104239866802905, 6.521109549232464e-05),
    (&[0.421634, 1.821288, 1.887192, 1.44442, 0.507481, 1.685657, 1.671521, 1.391742, 0.689904, 0.530515, 1.249378], &[-3.024367, 3.965654, -2.516575, 2.712337, -2.341795, 2.406793, 4.646463, 3.284666, 5.57384], -0.3772661242756718, 0.7153547376857723),
    (&[0.663443, 0.426102, -4.530896], &[2.244207, 2.895953, 2.920518, 3.529439, 1.056329], -2.107136676451474, 0.15533341768813957),
    (&[3.734603, 3.697696, 8.436473, 6.690222, 1.81234, 2.475136, 8.174446, 5.5446, 1.611525, 8.198873], &[-2.315873, -2.26613, -1.545655, -0.086375, -1.885427, -2.989214, -0.737178, -0.893355], 7.163869715473189, 1.3259423178503457e-05),
    (&[2.122627, 1.872496, 1.859035, 0.949475, 0.360199], &[3.95302, 3.595633, 4.058609, 5.448703, 5.459279, 4.100318, 4.543179, 5.371685, 3.05748, 3.076879, 3.529324], -6.424459129200994, 0.0001010498158067127),
    (&[5.881521, 3.419962, 4.474403, 5.150068, 4.823926, 3.989634, 4.342172, 4.422771, 4.739945, 4.35351], &[3.820409, 4.390961, 4.537276], 1.0251905474693106, 0.34369566734075613),
    (&[1.934339, -0.21796, -4.191385, -1.954443, 0.467174, 1.36587, -2.414573, -1.768662], &[-3.642046, -3.990408, -4.797198, -5.158635, -3.860247, -3.10886, -3.010237, -4.717184, -3.47132], 4.004148577072533, 0.003336776727271228),
    (&[5.692487, 5.520226, 3.961295], &[-1.193679, 2.716002, -1.064075, -3.247418], 4.233988416560004, 0.01292032469864098),
    (&[3.109936, -1.614345, 1.737935, 0.723944, 0.841328, 0.769521], &[2.853817, 2.241566, 3.965354, -0.66878, -0.668572], -0.542625348848147, 0.6037331160998248),
    (&[4.080291, -2.374845, 8.374254, -1.764123, 5.067912, -6.445994, 1.030032, -0.167324], &[0.993489, 2.592373, -0.465197, -0.161605], 0.13009522877341498, 0.8993540270073942),
    (&[3.497553, 3.253539, 5.158988, 3.991158, 4.190466, 3.763659, 4.735121, 3.860913, 3.67191, 4.349671, 3.051838], &[3.681392, 4.050855, 4.169628, 5.679156, 5.174689, 5.20702], -1.8718683443692599, 0.09614812731132438),
    (&[-4.228049, -3.089541, -3.140292, -3.526726], &[2.729975, -0.566889, 4.620414, 2.029106, 1.733976, 4.088222, 2.389354, 0.146949, 6.460374, 1.18634, 5.927538], -8.617178500377305, 1.4705032628632466e-06),
    (&[-1.278583, -0.702222, -0.531216, -2.397704, 1.379665, 2.308251, 1.226257, 0.906591], &[-1.932063, -1.29098, -1.958886, -0.489483], 2.3248163130652344, 0.042492480970374114),
    (&[-3.352571, -3.468964, -3.464701, -3.339659, -3.732078, -3.301215], &[5.767472, 3.071178, 8.346583, 3.919964, 2.325514, 5.472502, 3.958823, 3.528833, 2.408296, 1.484075, 2.621519], -12.303282654238718, 1.8468975475602686e-07),
    (&[4.689143, 1.626755, 2.994322, 3.153857, 1.277074], &[3.492259, 5.744848, 5.627829, 5.234317, 5.613862, 5.237595, 3.104941, 4.634085], -2.9538690325387, 0.02202370331325806),
    (&[-2.112643, -2.589483, -2.216132, -1.95407, -2.110799, -2.160091, -2.390842, -1.688753, -2.199794, -1.122284, -1.912387], &[2.532591, 1.936168, 1.67383, 2.211411], -18.939657241218043, 2.655892438206647e-06),
    (&[-0.380785, -0.805034, 0.849626, 1.857412, 2.511428, 1.394652], &[-0.681701, 2.53537, -1.300212, -1.810148, 5.731641, -0.466257, 0.629455], 0.21361720588020733, 0.835635303675641),
];

// Student-t CDF reference values: (t, dof, cdf).
pub const T_CDF_FIXTURES: &[(f64, f64, f64)] = &[
    (-4.0, 1.0, 0.07797913037736932),
    (-4.0, 2.5, 0.019506487920659125),
    (-4.0, 7.0, 0.0025949566746484064),
    (-4.0, 30.0, 0.0001909228180418782),
    (-4.0, 123.4, 5.42056347321992e-05),
    (-2.5, 1.0, 0.12111894159084335),
    (-2.5, 2.5, 0.052284981539077686),
    (-2.5, 7.0, 0.020496109292876437),
    (-2.5, 30.0, 0.009057824534033353),
    (-2.5, 123.4, 0.006865818347248452),
    (-1.0, 1.0, 0.24999999999999978),
    (-1.0, 2.5, 0.20203051363913677),
    (-1.0, 7.0, 0.17530833141010374),
    (-1.0, 30.0, 0.16265430771301492),
    (-1.0, 123.4, 0.1596336973980979),
    (-0.5, 1.0, 0.3524163823495668),
    (-0.5, 2.5, 0.3288489599348574),
    (-0.5, 7.0, 0.3162035678446421),
    (-0.5, 30.0, 0.31036150244256366),
    (-0.5, 123.4, 0.30898276395433255),
    (0.0, 1.0, 0.5),
    (0.0, 2.5, 0.5),
    (0.0, 7.0, 0.5),
    (0.0, 30.0, 0.5),
    (0.0, 123.4, 0.5),
    (0.3, 1.0, 0.5927735790777423),
    (0.3, 2.5, 0.6063288142524015),
    (0.3, 7.0, 0.6135549747989328),
    (0.3, 30.0, 0.6168769473578236),
    (0.3, 123.4, 0.6176590371869435),
    (1.0, 1.0, 0.7500000000000002),
    (1.0, 2.5, 0.7979694863608633),
    (1.0, 7.0, 0.8246916685898963),
    (1.0, 30.0, 0.8373456922869851),
    (1.0, 123.4, 0.8403663026019021),
    (2.0, 1.0, 0.8524163823495667),
    (2.0, 2.5, 0.9213042521210171),
    (2.0, 7.0, 0.9571903357185121),
    (2.0, 30.0, 0.9726874775185085),
    (2.0, 123.4, 0.9761519592758049),
    (3.5, 1.0, 0.9114144672170953),
    (3.5, 2.5, 0.9738272265198398),
    (3.5, 7.0, 0.9950034795590572),
    (3.5, 30.0, 0.9992615962811778),
    (3.5, 123.4, 0.9996759664423215),
];

// Regularized incomplete beta reference values: (a, b, x, I_x(a,b)).
pub const BETAINC_FIXTURES: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.5, 0.01, 0.06376856085851985),
    (0.5, 0.5, 0.2, 0.2951672353008665),
    (0.5, 0.5, 0.5, 0.5000000000000001),
    (0.5, 0.5, 0.8, 0.7048327646991335),
    (0.5, 0.5, 0.99, 0.9362314391414803),
    (1.0, 3.0, 0.01, 0.029700999999999995),
    (1.0, 3.0, 0.2, 0.4880000000000001),
    (1.0, 3.0, 0.5, 0.875),
    (1.0, 3.0, 0.8, 0.992),
    (1.0, 3.0, 0.99, 0.999999),
    (2.5, 0.5, 0.01, 3.4075027649461746e-06),
    (2.5, 0.5, 0.2, 0.00656627182756301),
    (2.5, 0.5, 0.5, 0.07558681842161241),
    (2.5, 0.5, 0.8, 0.3143726376470172),
    (2.5, 0.5, 0.99, 0.8310822789720563),
    (5.0, 5.0, 0.01, 1.218536857e-08),
    (5.0, 5.0, 0.2, 0.019581440000000012),
    (5.0, 5.0, 0.5, 0.5),
    (5.0, 5.0, 0.8, 0.98041856),
    (5.0, 5.0, 0.99, 0.9999999878146314),
    (0.5, 8.0, 0.01, 0.30700785029418753),
    (0.5, 8.0, 0.2, 0.9372280364853965),
    (0.5, 8.0, 0.5, 0.9989679751530911),
    (0.5, 8.0, 0.8, 0.9999994454552358),
    (0.5, 8.0, 0.99, 1.0),
    (12.0, 3.5, 0.01, 2.0551998300342646e-22),
    (12.0, 3.5, 0.2, 5.175330988775895e-07),
    (12.0, 3.5, 0.5, 0.01101680119127854),
    (12.0, 3.5, 0.8, 0.5529914972216476),
    (12.0, 3.5, 0.99, 0.9999338072170834),
];

// ln(Gamma(z)) reference values: (z, ln_gamma).
pub const LN_GAMMA_FIXTURES: &[(f64, f64)] = &[
    (0.1, 2.252712651734206),
    (0.5, 0.5723649429247),
    (1.0, 0.0),
    (1.5, -0.12078223763524526),
    (2.0, 0.0),
    (3.7, 1.428072326665388),
    (5.0, 3.1780538303479458),
    (10.0, 12.801827480081469),
    (42.5, 115.90007047041453),
    (171.0, 706.5730622457875),
];

// Chi-square survival function, 7 dof: (stat, sf).
pub const CHI2_SF_7_FIXTURES: &[(f64, f64)] = &[
    (0.5, 0.9994464813904249),
    (2.0, 0.9598403687301016),
    (4.5, 0.7207172737911487),
    (7.0, 0.42887985755305486),
    (12.0, 0.10055886850835878),
    (18.48, 0.009982195752062235),
    (30.0, 9.495972508134177e-05),
];
