/// Airy_1 partial-sum quantile tables typed in independently of the embedded data, `[r-1][level]`.
pub const EXPECTED_TABLES: [[f64; 100]; 10] = [
    [
        f64::NEG_INFINITY, -3.90, -3.61, -3.43, -3.30, -3.18, -3.08, -3.00, -2.92, -2.85,
        -2.78, -2.72, -2.67, -2.61, -2.56, -2.51, -2.46, -2.41, -2.37, -2.33,
        -2.29, -2.24, -2.20, -2.17, -2.13, -2.09, -2.05, -2.02, -1.98, -1.95,
        -1.91, -1.88, -1.84, -1.81, -1.78, -1.74, -1.71, -1.68, -1.65, -1.62,
        -1.58, -1.55, -1.52, -1.49, -1.46, -1.43, -1.40, -1.36, -1.33, -1.30,
        -1.27, -1.24, -1.21, -1.17, -1.14, -1.11, -1.08, -1.05, -1.01, -0.98,
        -0.95, -0.91, -0.88, -0.85, -0.81, -0.78, -0.74, -0.71, -0.67, -0.63,
        -0.59, -0.56, -0.52, -0.48, -0.44, -0.39, -0.35, -0.31, -0.26, -0.22,
        -0.17, -0.12, -0.07, -0.01, 0.04, 0.10, 0.16, 0.23, 0.30, 0.37,
        0.45, 0.53, 0.63, 0.73, 0.85, 0.98, 1.14, 1.33, 1.60, 2.02,
    ],
    [
        f64::NEG_INFINITY, -8.93, -8.44, -8.12, -7.88, -7.69, -7.52, -7.37, -7.24, -7.12,
        -7.01, -6.91, -6.81, -6.72, -6.63, -6.54, -6.46, -6.39, -6.31, -6.24,
        -6.17, -6.10, -6.04, -5.97, -5.91, -5.85, -5.79, -5.73, -5.67, -5.61,
        -5.56, -5.50, -5.45, -5.39, -5.34, -5.29, -5.23, -5.18, -5.13, -5.08,
        -5.03, -4.97, -4.92, -4.87, -4.82, -4.77, -4.72, -4.67, -4.62, -4.57,
        -4.52, -4.47, -4.42, -4.37, -4.32, -4.27, -4.22, -4.17, -4.11, -4.06,
        -4.01, -3.96, -3.91, -3.85, -3.80, -3.74, -3.69, -3.63, -3.57, -3.52,
        -3.46, -3.40, -3.34, -3.27, -3.21, -3.15, -3.08, -3.01, -2.94, -2.87,
        -2.80, -2.72, -2.65, -2.57, -2.48, -2.39, -2.30, -2.20, -2.10, -1.99,
        -1.87, -1.75, -1.61, -1.46, -1.29, -1.09, -0.86, -0.57, -0.19, 0.42,
    ],
    [
        f64::NEG_INFINITY, -15.2, -14.6, -14.1, -13.8, -13.5, -13.3, -13.1, -12.9, -12.8,
        -12.6, -12.5, -12.4, -12.2, -12.1, -12.0, -11.9, -11.8, -11.7, -11.6,
        -11.5, -11.4, -11.3, -11.3, -11.2, -11.1, -11.0, -10.9, -10.9, -10.8,
        -10.7, -10.6, -10.6, -10.5, -10.4, -10.3, -10.3, -10.2, -10.1, -10.1,
        -10.0, -9.93, -9.87, -9.80, -9.73, -9.67, -9.60, -9.54, -9.47, -9.40,
        -9.34, -9.27, -9.21, -9.14, -9.07, -9.01, -8.94, -8.87, -8.80, -8.74,
        -8.67, -8.60, -8.53, -8.46, -8.39, -8.32, -8.25, -8.17, -8.10, -8.02,
        -7.95, -7.87, -7.79, -7.71, -7.63, -7.55, -7.46, -7.37, -7.28, -7.19,
        -7.10, -7.00, -6.90, -6.79, -6.68, -6.57, -6.45, -6.33, -6.19, -6.05,
        -5.90, -5.74, -5.56, -5.37, -5.15, -4.90, -4.60, -4.24, -3.76, -2.99,
    ],
    [
        f64::NEG_INFINITY, -22.7, -21.9, -21.4, -21.0, -20.7, -20.4, -20.1, -19.9, -19.7,
        -19.5, -19.3, -19.2, -19.0, -18.9, -18.8, -18.6, -18.5, -18.4, -18.3,
        -18.2, -18.0, -17.9, -17.8, -17.7, -17.6, -17.5, -17.4, -17.3, -17.3,
        -17.2, -17.1, -17.0, -16.9, -16.8, -16.7, -16.6, -16.6, -16.5, -16.4,
        -16.3, -16.2, -16.1, -16.1, -16.0, -15.9, -15.8, -15.7, -15.7, -15.6,
        -15.5, -15.4, -15.3, -15.3, -15.2, -15.1, -15.0, -14.9, -14.8, -14.8,
        -14.7, -14.6, -14.5, -14.4, -14.4, -14.3, -14.2, -14.1, -14.0, -13.9,
        -13.8, -13.7, -13.6, -13.5, -13.4, -13.3, -13.2, -13.1, -13.0, -12.9,
        -12.8, -12.7, -12.6, -12.4, -12.3, -12.2, -12.0, -11.9, -11.7, -11.5,
        -11.4, -11.2, -11.0, -10.7, -10.5, -10.2, -9.80, -9.37, -8.79, -7.87,
    ],
    [
        f64::NEG_INFINITY, -31.3, -30.3, -29.7, -29.2, -28.9, -28.5, -28.2, -28.0, -27.8,
        -27.5, -27.4, -27.2, -27.0, -26.8, -26.7, -26.5, -26.4, -26.2, -26.1,
        -26.0, -25.8, -25.7, -25.6, -25.5, -25.3, -25.2, -25.1, -25.0, -24.9,
        -24.8, -24.7, -24.6, -24.5, -24.4, -24.3, -24.2, -24.1, -24.0, -23.9,
        -23.8, -23.7, -23.6, -23.5, -23.4, -23.3, -23.2, -23.1, -23.1, -23.0,
        -22.9, -22.8, -22.7, -22.6, -22.5, -22.4, -22.3, -22.2, -22.1, -22.0,
        -21.9, -21.8, -21.7, -21.6, -21.5, -21.4, -21.3, -21.2, -21.1, -21.0,
        -20.9, -20.8, -20.7, -20.6, -20.5, -20.4, -20.2, -20.1, -20.0, -19.9,
        -19.7, -19.6, -19.5, -19.3, -19.2, -19.0, -18.8, -18.7, -18.5, -18.3,
        -18.1, -17.9, -17.6, -17.3, -17.0, -16.7, -16.3, -15.8, -15.1, -14.1,
    ],
    [
        f64::NEG_INFINITY, -40.9, -39.8, -39.1, -38.6, -38.1, -37.8, -37.4, -37.2, -36.9,
        -36.7, -36.4, -36.2, -36.0, -35.8, -35.6, -35.5, -35.3, -35.1, -35.0,
        -34.8, -34.7, -34.6, -34.4, -34.3, -34.2, -34.0, -33.9, -33.8, -33.7,
        -33.5, -33.4, -33.3, -33.2, -33.1, -33.0, -32.9, -32.7, -32.6, -32.5,
        -32.4, -32.3, -32.2, -32.1, -32.0, -31.9, -31.8, -31.7, -31.6, -31.5,
        -31.4, -31.3, -31.1, -31.0, -30.9, -30.8, -30.7, -30.6, -30.5, -30.4,
        -30.3, -30.2, -30.1, -30.0, -29.9, -29.7, -29.6, -29.5, -29.4, -29.3,
        -29.1, -29.0, -28.9, -28.8, -28.7, -28.5, -28.4, -28.3, -28.1, -28.0,
        -27.8, -27.7, -27.5, -27.3, -27.2, -27.0, -26.8, -26.6, -26.4, -26.2,
        -29.0, -25.7, -25.4, -25.1, -24.8, -24.4, -23.9, -23.4, -22.6, -21.5,
    ],
    [
        f64::NEG_INFINITY, -51.5, -50.3, -49.5, -48.9, -48.4, -48.0, -47.6, -47.3, -47.0,
        -46.8, -46.5, -46.3, -46.1, -45.8, -45.6, -45.5, -45.3, -45.1, -44.9,
        -44.8, -44.6, -44.4, -44.3, -44.1, -44.0, -43.9, -43.7, -43.6, -43.4,
        -43.3, -43.2, -43.0, -42.9, -42.8, -42.7, -42.5, -42.4, -42.3, -42.2,
        -42.1, -41.9, -41.8, -41.7, -41.6, -41.5, -41.4, -41.2, -41.1, -41.0,
        -40.9, -40.8, -40.7, -40.5, -40.4, -40.3, -40.2, -40.1, -40.0, -39.8,
        -39.7, -39.6, -39.5, -39.4, -39.2, -39.1, -39.0, -38.8, -38.7, -38.6,
        -38.5, -38.3, -38.2, -38.0, -37.9, -37.8, -37.6, -37.5, -37.3, -37.3,
        -37.0, -36.8, -36.6, -36.4, -36.3, -36.1, -35.9, -35.6, -35.4, -35.2,
        -34.9, -34.6, -34.3, -34.0, -33.6, -33.2, -32.7, -32.1, -31.2, -30.0,
    ],
    [
        f64::NEG_INFINITY, -63.0, -61.7, -60.8, -60.2, -59.7, -59.2, -58.8, -58.5, -58.1,
        -57.8, -57.6, -57.3, -57.1, -56.8, -56.6, -56.4, -56.2, -56.0, -55.8,
        -55.6, -55.5, -55.3, -55.1, -55.0, -54.8, -54.7, -54.5, -54.4, -54.2,
        -54.1, -53.9, -53.8, -53.6, -53.5, -53.4, -53.2, -53.1, -53.0, -52.8,
        -52.7, -52.6, -52.4, -52.3, -52.2, -52.0, -51.9, -51.8, -51.7, -51.5,
        -51.4, -51.3, -51.2, -51.0, -50.9, -50.8, -50.6, -50.5, -50.4, -50.3,
        -50.1, -50.0, -49.9, -49.7, -49.6, -49.5, -49.3, -49.2, -49.0, -48.9,
        -48.8, -48.6, -48.5, -48.3, -48.1, -48.0, -47.8, -47.7, -47.5, -47.3,
        -47.1, -47.0, -46.8, -46.6, -46.4, -46.1, -45.9, -45.7, -45.4, -45.2,
        -44.9, -44.6, -44.2, -43.9, -43.5, -43.0, -42.5, -41.8, -40.9, -39.5,
    ],
    [
        f64::NEG_INFINITY, -75.5, -74.0, -73.1, -72.4, -71.8, -71.3, -70.9, -70.5, -70.2,
        -69.9, -69.6, -69.3, -69.0, -68.8, -68.5, -68.3, -68.1, -67.9, -67.7,
        -67.5, -67.3, -67.1, -66.9, -66.7, -66.6, -66.4, -66.2, -66.1, -65.9,
        -65.7, -65.6, -65.4, -65.3, -65.1, -65.0, -64.8, -64.7, -64.6, -64.4,
        -64.3, -64.1, -64.0, -63.8, -63.7, -63.6, -63.4, -63.3, -63.2, -63.0,
        -62.9, -62.7, -62.6, -62.5, -62.3, -62.2, -62.1, -61.9, -61.8, -61.6,
        -61.5, -61.4, -61.2, -61.1, -60.9, -60.8, -60.6, -60.5, -60.3, -60.2,
        -60.0, -59.9, -59.7, -59.5, -59.4, -59.2, -59.0, -58.8, -58.6, -58.5,
        -58.3, -58.1, -57.9, -57.6, -57.4, -57.2, -56.9, -56.7, -56.4, -56.1,
        -55.8, -55.5, -55.1, -54.7, -54.3, -53.8, -53.2, -52.5, -51.5, -50.0,
    ],
    [
        f64::NEG_INFINITY, -88.8, -87.2, -86.2, -85.5, -84.9, -84.3, -83.9, -83.5, -83.1,
        -82.8, -82.4, -82.1, -81.8, -81.6, -81.3, -81.1, -80.8, -80.6, -80.4,
        -80.2, -80.0, -79.8, -79.6, -79.4, -79.2, -79.0, -78.9, -78.7, -78.5,
        -78.3, -78.2, -78.0, -77.8, -77.7, -77.5, -77.4, -77.2, -77.1, -76.9,
        -76.8, -76.6, -76.5, -76.3, -76.2, -76.0, -75.9, -75.7, -75.6, -75.4,
        -75.3, -75.1, -75.0, -74.8, -74.7, -74.5, -74.4, -74.2, -74.1, -73.9,
        -73.8, -73.6, -73.5, -73.3, -73.2, -73.0, -72.8, -72.7, -72.5, -72.4,
        -72.2, -72.0, -71.8, -71.7, -71.5, -71.3, -71.1, -70.9, -70.7, -70.5,
        -70.3, -70.1, -69.9, -69.6, -69.4, -69.2, -68.9, -68.6, -68.3, -68.0,
        -67.7, -67.3, -67.0, -66.5, -66.1, -65.5, -64.9, -64.1, -63.1, -61.5,
    ],
];
