//! Published reference values.
//!
//! Layout: `[M index][row][alpha index]` with `M` in `MS`, `alpha` in `ALPHAS`;
//! scalar rows are `kappa = 1..=6`, solution rows are `eps`, `eps_inf`.

pub const MS: [usize; 3] = [50, 100, 200];
pub const ALPHAS: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
pub const KAPPAS: [f64; 6] = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];

/// Maximum error over [1, 1e20]: midpoint rule, resolvent form.
pub const MIDPOINT_RESOLVENT: [[[f64; 5]; 6]; 3] = [
    [
        [5.374386e-03, 3.975611e-03, 1.777798e-03, 6.057090e-04, 1.860264e-04],
        [9.694686e-05, 1.546665e-04, 6.365306e-05, 3.000009e-05, 1.090598e-05],
        [9.583340e-05, 8.914710e-05, 6.363818e-05, 3.000215e-05, 1.092388e-05],
        [1.264541e-04, 1.189327e-04, 8.483208e-05, 4.000540e-05, 1.457062e-05],
        [1.548898e-04, 1.485671e-04, 1.060141e-04, 5.000617e-05, 1.821371e-05],
        [1.841219e-04, 1.780018e-04, 1.271753e-04, 6.000429e-05, 2.185621e-05],
    ],
    [
        [1.294685e-03, 1.985566e-03, 8.876394e-04, 3.029813e-04, 9.380258e-05],
        [2.433513e-05, 3.853785e-05, 1.591494e-05, 7.501982e-06, 2.730852e-06],
        [2.426684e-05, 2.234929e-05, 1.591401e-05, 7.502111e-06, 2.731974e-06],
        [3.232626e-05, 2.983899e-05, 2.121750e-05, 1.000297e-05, 3.642973e-06],
        [4.029470e-05, 3.731919e-05, 2.652025e-05, 1.250368e-05, 4.553745e-06],
        [4.814931e-05, 4.478680e-05, 3.182170e-05, 1.500422e-05, 5.464479e-06],
    ],
    [
        [1.647562e-04, 9.922321e-04, 4.435056e-04, 1.515251e-04, 4.710344e-05],
        [6.092649e-06, 9.617959e-06, 3.978839e-06, 1.875618e-06, 6.829863e-07],
        [6.088573e-06, 5.596207e-06, 3.978781e-06, 1.875626e-06, 6.830565e-07],
        [8.129377e-06, 7.471178e-06, 5.304967e-06, 2.500845e-06, 9.107634e-07],
        [1.016443e-05, 9.345551e-06, 6.631108e-06, 3.126054e-06, 1.138456e-06],
        [1.219226e-05, 1.121914e-05, 7.957167e-06, 3.751252e-06, 1.366146e-06],
    ],
];

/// Maximum error over [1, 1e20]: midpoint rule, split form.
pub const MIDPOINT_SPLIT: [[[f64; 5]; 6]; 3] = [
    [
        [5.347988e-03, 3.966817e-03, 1.772738e-03, 1.500737e-05, 1.640307e-05],
        [8.982157e-05, 1.536406e-04, 6.366643e-05, 6.004424e-05, 6.565671e-05],
        [4.946450e-05, 4.509810e-05, 3.184883e-05, 4.509810e-05, 4.946450e-05],
        [6.626068e-05, 6.021592e-05, 4.248002e-05, 6.021592e-05, 6.626068e-05],
        [8.336423e-05, 7.541989e-05, 5.314105e-05, 7.541989e-05, 8.336423e-05],
        [1.008694e-04, 9.071839e-05, 6.381866e-05, 9.071839e-05, 1.008694e-04],
    ],
    [
        [1.289544e-03, 1.983358e-03, 8.863758e-04, 3.751449e-06, 4.099039e-06],
        [1.639890e-05, 3.840905e-05, 1.591577e-05, 1.500672e-05, 1.639890e-05],
        [1.231272e-05, 1.125908e-05, 7.958861e-06, 1.125908e-05, 1.231272e-05],
        [1.643508e-05, 1.501738e-05, 1.061274e-05, 1.501738e-05, 1.643508e-05],
        [2.057415e-05, 1.878095e-05, 1.326849e-05, 1.878095e-05, 2.057415e-05],
        [2.473359e-05, 2.255024e-05, 1.592525e-05, 2.255024e-05, 2.473359e-05],
    ],
    [
        [1.638621e-04, 9.916965e-04, 4.431897e-04, 9.378377e-07, 1.024652e-06],
        [4.098779e-06, 9.602172e-06, 3.978891e-06, 3.751408e-06, 4.098779e-06],
        [3.074926e-06, 2.813809e-06, 1.989506e-06, 2.813809e-06, 3.074926e-06],
        [4.101019e-06, 3.752073e-06, 2.652733e-06, 3.752073e-06, 4.101019e-06],
        [5.128125e-06, 4.690667e-06, 3.316076e-06, 4.690667e-06, 5.128125e-06],
        [6.156442e-06, 5.629614e-06, 3.979483e-06, 5.629614e-06, 6.156442e-06],
    ],
];

/// Maximum error over [1, 1e20]: Simpson rule, resolvent form.
pub const SIMPSON_RESOLVENT: [[[f64; 5]; 6]; 3] = [
    [
        [1.853227e-02, 1.799633e-02, 1.273240e-02, 6.002109e-03, 2.185848e-03],
        [3.949860e-04, 2.269479e-04, 5.687915e-05, 1.750531e-05, 5.280150e-06],
        [1.275793e-04, 2.277837e-05, 4.469762e-06, 1.174967e-06, 3.586255e-07],
        [9.400469e-05, 5.571588e-06, 5.614120e-07, 9.194800e-08, 3.276035e-08],
        [2.658768e-04, 4.032756e-06, 4.091810e-07, 5.210468e-08, 3.395709e-08],
        [9.293393e-04, 7.461337e-06, 6.803497e-07, 7.645749e-08, 1.132277e-07],
    ],
    [
        [9.253872e-03, 8.993163e-03, 6.366198e-03, 3.001054e-03, 1.092924e-03],
        [2.695390e-05, 5.624706e-05, 1.413623e-05, 4.328911e-06, 1.290228e-06],
        [3.871962e-06, 2.782215e-06, 5.489516e-07, 1.401037e-07, 3.949594e-08],
        [1.981503e-06, 3.273869e-07, 3.283343e-08, 5.249440e-09, 1.580743e-09],
        [2.380378e-06, 2.949317e-07, 2.549296e-08, 3.259146e-09, 4.821441e-10],
        [4.575033e-06, 4.604162e-07, 4.247676e-08, 4.799821e-09, 6.473959e-10],
    ],
    [
        [3.535332e-03, 4.491582e-03, 3.183099e-03, 1.500527e-03, 5.464620e-04],
        [1.864876e-07, 1.399930e-05, 3.523765e-06, 1.076370e-06, 3.189672e-07],
        [3.715126e-08, 2.692643e-07, 6.802848e-08, 1.710196e-08, 4.636237e-09],
        [7.661090e-08, 2.266696e-08, 1.986647e-09, 3.136784e-10, 8.664345e-11],
        [1.420196e-07, 2.919238e-08, 1.591996e-09, 2.037560e-10, 3.016176e-11],
        [2.398536e-07, 3.930730e-08, 2.653151e-09, 3.000763e-10, 4.047396e-11],
    ],
];

/// Solution errors `(eps, eps_inf)` on 256^2: sgn right-hand side, midpoint, kappa = 3.
pub const SGN_MIDPOINT: [[[f64; 5]; 2]; 3] = [
    [
        [1.669630e-06, 3.172818e-06, 6.976081e-06, 9.886524e-06, 6.807410e-06],
        [1.931587e-06, 3.483513e-06, 7.301196e-06, 1.006909e-05, 6.868003e-06],
    ],
    [
        [4.234571e-07, 7.955079e-07, 1.749686e-06, 2.493483e-06, 1.746540e-06],
        [4.899010e-07, 8.733658e-07, 1.830969e-06, 2.538547e-06, 1.758218e-06],
    ],
    [
        [1.062490e-07, 1.990234e-07, 4.377758e-07, 6.247408e-07, 4.394942e-07],
        [1.229199e-07, 2.184997e-07, 4.580968e-07, 6.359638e-07, 4.422973e-07],
    ],
];

/// Solution errors `(eps, eps_inf)` on 256^2: sgn right-hand side, Simpson, kappa = 5.
pub const SGN_SIMPSON: [[[f64; 5]; 2]; 3] = [
    [
        [1.286770e-04, 2.641118e-07, 5.182607e-08, 2.110766e-08, 2.297871e-07],
        [1.558345e-04, 3.437617e-07, 5.442683e-08, 3.023970e-08, 2.475985e-07],
    ],
    [
        [7.460526e-08, 9.578675e-09, 3.256882e-09, 1.074501e-09, 2.876888e-10],
        [1.013479e-07, 1.051652e-08, 3.407962e-09, 1.094340e-09, 2.910291e-10],
    ],
    [
        [2.528173e-09, 6.061693e-10, 2.038772e-10, 6.772998e-11, 1.906629e-11],
        [2.924801e-09, 6.656861e-10, 2.133260e-10, 6.895408e-11, 1.920284e-11],
    ],
];

/// Solution errors `(eps, eps_inf)` on 256^2: x1 x2 right-hand side, Simpson, kappa = 5.
pub const XY_SIMPSON: [[[f64; 5]; 2]; 3] = [
    [
        [1.209581e-04, 3.444934e-07, 9.686650e-08, 2.433874e-08, 7.815106e-08],
        [1.141529e-04, 3.688685e-07, 9.631475e-08, 2.422181e-08, 8.320527e-08],
    ],
    [
        [1.030346e-07, 2.380002e-08, 6.073046e-09, 1.493598e-09, 3.465175e-10],
        [1.108808e-07, 2.349288e-08, 6.059424e-09, 1.493626e-09, 3.468453e-10],
    ],
    [
        [7.245613e-09, 1.539020e-09, 3.799707e-10, 9.359799e-11, 2.202853e-11],
        [6.960763e-09, 1.518666e-09, 3.791153e-10, 9.359548e-11, 2.203251e-11],
    ],
];

/// Solution errors `(eps, eps_inf)` on 256^2: bubble right-hand side, Simpson, kappa = 5.
pub const BUBBLE_SIMPSON: [[[f64; 5]; 2]; 3] = [
    [
        [5.800855e-05, 4.000618e-07, 1.056566e-07, 2.455535e-08, 4.044510e-08],
        [6.236828e-05, 3.995393e-07, 1.061651e-07, 2.460929e-08, 3.914376e-08],
    ],
    [
        [6.407204e-08, 2.899259e-08, 6.627865e-09, 1.541997e-09, 3.513618e-10],
        [6.549602e-08, 2.924586e-08, 6.659433e-09, 1.545095e-09, 3.516994e-10],
    ],
    [
        [9.952338e-09, 1.877999e-09, 4.146733e-10, 9.659714e-11, 2.227958e-11],
        [1.006940e-08, 1.894607e-09, 4.166460e-10, 9.678749e-11, 2.229965e-11],
    ],
];

/// Maximum of the solution for the sgn right-hand side on 256^2, by alpha.
pub const SGN_UMAX: [(f64, f64); 4] = [(0.1, 6.914610e-01), (0.25, 3.903881e-01), (0.5, 1.451668e-01), (0.75, 5.227385e-02)];
