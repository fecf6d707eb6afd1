// Taylor coefficients in z = 1 - 2p of the Riemann-Siegel correction terms C0, C1, C2.

pub const C0: [f64; 39] = [
    0.3826834323650898,
    0.0,
    0.43724046807752043,
    0.0,
    0.1323765754803435,
    0.0,
    -0.013605026047674188,
    0.0,
    -0.013567621970103581,
    0.0,
    -0.0016237253231444653,
    0.0,
    0.0002970535373337969,
    0.0,
    7.94330087952147e-05,
    0.0,
    4.6556124614504504e-07,
    0.0,
    -1.4327251630955106e-06,
    0.0,
    -1.0354847112312946e-07,
    0.0,
    1.2357927083861738e-08,
    0.0,
    1.7881083857954906e-09,
    0.0,
    -3.391414389927036e-11,
    0.0,
    -1.6326633902565907e-11,
    0.0,
    -3.7851093185412205e-13,
    0.0,
    9.327423259201725e-14,
    0.0,
    5.221843015978137e-15,
    0.0,
    -3.350673072744264e-16,
    0.0,
    -3.4124265228117265e-17,
];

pub const C1: [f64; 40] = [
    0.0,
    0.026825102628375348,
    0.0,
    -0.013784773426351853,
    0.0,
    -0.03849125048223508,
    0.0,
    -0.009871066299062077,
    0.0,
    0.0033107597608584044,
    0.0,
    0.0014647808577954152,
    0.0,
    1.3207940624876963e-05,
    0.0,
    -5.9227487018471416e-05,
    0.0,
    -5.980242585373449e-06,
    0.0,
    9.641322456169826e-07,
    0.0,
    1.8334733722714413e-07,
    0.0,
    -4.4670875627178334e-09,
    0.0,
    -2.7096350821772744e-09,
    0.0,
    -7.785288654315851e-11,
    0.0,
    2.343762601089369e-11,
    0.0,
    1.5830172789987521e-12,
    0.0,
    -1.211994157372379e-13,
    0.0,
    -1.4583781161108306e-14,
    0.0,
    2.878630525813192e-16,
    0.0,
    8.662862902123724e-17,
];

pub const C2: [f64; 39] = [
    0.005188542830293168,
    0.0,
    0.00030946583880634744,
    0.0,
    -0.011335941078229373,
    0.0,
    0.0022330457419581446,
    0.0,
    0.00519663740886233,
    0.0,
    0.0003439914407620834,
    0.0,
    -0.0005910648427470583,
    0.0,
    -0.00010229972547935857,
    0.0,
    2.0888392216992754e-05,
    0.0,
    5.927665493096536e-06,
    0.0,
    -1.6423838362436276e-07,
    0.0,
    -1.5161199700940684e-07,
    0.0,
    -5.907803698206668e-09,
    0.0,
    2.0911514859478188e-09,
    0.0,
    1.781564958329235e-10,
    0.0,
    -1.6164072455353832e-11,
    0.0,
    -2.3806962496667617e-12,
    0.0,
    5.398265295542595e-14,
    0.0,
    1.9750142196969516e-14,
    0.0,
    2.3332868732882633e-16,
];
