// Generated by tools/gen_lebedev.py. Do not edit.
// Rows are (x, y, z, w) with weights summing to 1.

pub(super) static LEBEDEV_6: [[f64; 4]; 6] = [
    [1.0, 0.0, 0.0, 0.16666666666666666],
    [-1.0, 0.0, 0.0, 0.16666666666666666],
    [0.0, 1.0, 0.0, 0.16666666666666666],
    [0.0, -1.0, 0.0, 0.16666666666666666],
    [0.0, 0.0, 1.0, 0.16666666666666666],
    [0.0, 0.0, -1.0, 0.16666666666666666],
];

pub(super) static LEBEDEV_26: [[f64; 4]; 26] = [
    [1.0, 0.0, 0.0, 0.04761904761904762],
    [-1.0, 0.0, 0.0, 0.04761904761904762],
    [0.0, 1.0, 0.0, 0.04761904761904762],
    [0.0, -1.0, 0.0, 0.04761904761904762],
    [0.0, 0.0, 1.0, 0.04761904761904762],
    [0.0, 0.0, -1.0, 0.04761904761904762],
    [0.0, 0.7071067811865476, 0.7071067811865476, 0.0380952380952381],
    [0.0, -0.7071067811865476, 0.7071067811865476, 0.0380952380952381],
    [0.0, 0.7071067811865476, -0.7071067811865476, 0.0380952380952381],
    [0.0, -0.7071067811865476, -0.7071067811865476, 0.0380952380952381],
    [0.7071067811865476, 0.0, 0.7071067811865476, 0.0380952380952381],
    [0.7071067811865476, 0.0, -0.7071067811865476, 0.0380952380952381],
    [-0.7071067811865476, 0.0, 0.7071067811865476, 0.0380952380952381],
    [-0.7071067811865476, 0.0, -0.7071067811865476, 0.0380952380952381],
    [0.7071067811865476, 0.7071067811865476, 0.0, 0.0380952380952381],
    [-0.7071067811865476, 0.7071067811865476, 0.0, 0.0380952380952381],
    [0.7071067811865476, -0.7071067811865476, 0.0, 0.0380952380952381],
    [-0.7071067811865476, -0.7071067811865476, 0.0, 0.0380952380952381],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.03214285714285714],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.03214285714285714],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.03214285714285714],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.03214285714285714],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.03214285714285714],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.03214285714285714],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.03214285714285714],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.03214285714285714],
];

pub(super) static LEBEDEV_50: [[f64; 4]; 50] = [
    [1.0, 0.0, 0.0, 0.0126984126984127],
    [-1.0, 0.0, 0.0, 0.0126984126984127],
    [0.0, 1.0, 0.0, 0.0126984126984127],
    [0.0, -1.0, 0.0, 0.0126984126984127],
    [0.0, 0.0, 1.0, 0.0126984126984127],
    [0.0, 0.0, -1.0, 0.0126984126984127],
    [0.0, 0.7071067811865476, 0.7071067811865476, 0.02257495590828924],
    [0.0, -0.7071067811865476, 0.7071067811865476, 0.02257495590828924],
    [0.0, 0.7071067811865476, -0.7071067811865476, 0.02257495590828924],
    [0.0, -0.7071067811865476, -0.7071067811865476, 0.02257495590828924],
    [0.7071067811865476, 0.0, 0.7071067811865476, 0.02257495590828924],
    [0.7071067811865476, 0.0, -0.7071067811865476, 0.02257495590828924],
    [-0.7071067811865476, 0.0, 0.7071067811865476, 0.02257495590828924],
    [-0.7071067811865476, 0.0, -0.7071067811865476, 0.02257495590828924],
    [0.7071067811865476, 0.7071067811865476, 0.0, 0.02257495590828924],
    [-0.7071067811865476, 0.7071067811865476, 0.0, 0.02257495590828924],
    [0.7071067811865476, -0.7071067811865476, 0.0, 0.02257495590828924],
    [-0.7071067811865476, -0.7071067811865476, 0.0, 0.02257495590828924],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.02109375],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.02109375],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.02109375],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.02109375],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.02109375],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.02109375],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.02109375],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.02109375],
    [0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.02017333553791887],
    [-0.3015113445777636, 0.3015113445777636, 0.9045340337332909, 0.02017333553791887],
    [0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.02017333553791887],
    [0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.02017333553791887],
    [-0.3015113445777636, -0.3015113445777636, 0.9045340337332909, 0.02017333553791887],
    [-0.3015113445777636, 0.3015113445777636, -0.9045340337332909, 0.02017333553791887],
    [0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.02017333553791887],
    [-0.3015113445777636, -0.3015113445777636, -0.9045340337332909, 0.02017333553791887],
    [-0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.02017333553791887],
    [0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.02017333553791887],
    [0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.02017333553791887],
    [-0.3015113445777636, -0.9045340337332909, 0.3015113445777636, 0.02017333553791887],
    [-0.3015113445777636, 0.9045340337332909, -0.3015113445777636, 0.02017333553791887],
    [0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.02017333553791887],
    [-0.3015113445777636, -0.9045340337332909, -0.3015113445777636, 0.02017333553791887],
    [0.3015113445777636, 0.9045340337332909, 0.3015113445777636, 0.02017333553791887],
    [0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.02017333553791887],
    [-0.9045340337332909, 0.3015113445777636, 0.3015113445777636, 0.02017333553791887],
    [0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.02017333553791887],
    [0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.02017333553791887],
    [-0.9045340337332909, -0.3015113445777636, 0.3015113445777636, 0.02017333553791887],
    [-0.9045340337332909, 0.3015113445777636, -0.3015113445777636, 0.02017333553791887],
    [0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.02017333553791887],
    [-0.9045340337332909, -0.3015113445777636, -0.3015113445777636, 0.02017333553791887],
];

pub(super) static LEBEDEV_110: [[f64; 4]; 110] = [
    [1.0, 0.0, 0.0, 0.003828270494937161],
    [-1.0, 0.0, 0.0, 0.003828270494937161],
    [0.0, 1.0, 0.0, 0.003828270494937161],
    [0.0, -1.0, 0.0, 0.003828270494937161],
    [0.0, 0.0, 1.0, 0.003828270494937161],
    [0.0, 0.0, -1.0, 0.003828270494937161],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.009793737512487511],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.009793737512487511],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.009793737512487511],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.009793737512487511],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.009793737512487511],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.009793737512487511],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.009793737512487511],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.009793737512487511],
    [0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.00821173728319111],
    [-0.1851156353447362, 0.1851156353447362, 0.9651240350865941, 0.00821173728319111],
    [0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.00821173728319111],
    [0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.00821173728319111],
    [-0.1851156353447362, -0.1851156353447362, 0.9651240350865941, 0.00821173728319111],
    [-0.1851156353447362, 0.1851156353447362, -0.9651240350865941, 0.00821173728319111],
    [0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.00821173728319111],
    [-0.1851156353447362, -0.1851156353447362, -0.9651240350865941, 0.00821173728319111],
    [-0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.00821173728319111],
    [0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.00821173728319111],
    [0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.00821173728319111],
    [-0.1851156353447362, -0.9651240350865941, 0.1851156353447362, 0.00821173728319111],
    [-0.1851156353447362, 0.9651240350865941, -0.1851156353447362, 0.00821173728319111],
    [0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.00821173728319111],
    [-0.1851156353447362, -0.9651240350865941, -0.1851156353447362, 0.00821173728319111],
    [0.1851156353447362, 0.9651240350865941, 0.1851156353447362, 0.00821173728319111],
    [0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.00821173728319111],
    [-0.9651240350865941, 0.1851156353447362, 0.1851156353447362, 0.00821173728319111],
    [0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.00821173728319111],
    [0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.00821173728319111],
    [-0.9651240350865941, -0.1851156353447362, 0.1851156353447362, 0.00821173728319111],
    [-0.9651240350865941, 0.1851156353447362, -0.1851156353447362, 0.00821173728319111],
    [0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.00821173728319111],
    [-0.9651240350865941, -0.1851156353447362, -0.1851156353447362, 0.00821173728319111],
    [0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.009942814891178101],
    [-0.6904210483822922, 0.6904210483822922, 0.21595729184584844, 0.009942814891178101],
    [0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.009942814891178101],
    [0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.009942814891178101],
    [-0.6904210483822922, -0.6904210483822922, 0.21595729184584844, 0.009942814891178101],
    [-0.6904210483822922, 0.6904210483822922, -0.21595729184584844, 0.009942814891178101],
    [0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.009942814891178101],
    [-0.6904210483822922, -0.6904210483822922, -0.21595729184584844, 0.009942814891178101],
    [-0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.009942814891178101],
    [0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.009942814891178101],
    [0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.009942814891178101],
    [-0.6904210483822922, -0.21595729184584844, 0.6904210483822922, 0.009942814891178101],
    [-0.6904210483822922, 0.21595729184584844, -0.6904210483822922, 0.009942814891178101],
    [0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.009942814891178101],
    [-0.6904210483822922, -0.21595729184584844, -0.6904210483822922, 0.009942814891178101],
    [0.6904210483822922, 0.21595729184584844, 0.6904210483822922, 0.009942814891178101],
    [0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.009942814891178101],
    [-0.21595729184584844, 0.6904210483822922, 0.6904210483822922, 0.009942814891178101],
    [0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.009942814891178101],
    [0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.009942814891178101],
    [-0.21595729184584844, -0.6904210483822922, 0.6904210483822922, 0.009942814891178101],
    [-0.21595729184584844, 0.6904210483822922, -0.6904210483822922, 0.009942814891178101],
    [0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.009942814891178101],
    [-0.21595729184584844, -0.6904210483822922, -0.6904210483822922, 0.009942814891178101],
    [0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.00959547133607096],
    [-0.3956894730559419, 0.3956894730559419, 0.8287699812525923, 0.00959547133607096],
    [0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.00959547133607096],
    [0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.00959547133607096],
    [-0.3956894730559419, -0.3956894730559419, 0.8287699812525923, 0.00959547133607096],
    [-0.3956894730559419, 0.3956894730559419, -0.8287699812525923, 0.00959547133607096],
    [0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.00959547133607096],
    [-0.3956894730559419, -0.3956894730559419, -0.8287699812525923, 0.00959547133607096],
    [-0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.00959547133607096],
    [0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.00959547133607096],
    [0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.00959547133607096],
    [-0.3956894730559419, -0.8287699812525923, 0.3956894730559419, 0.00959547133607096],
    [-0.3956894730559419, 0.8287699812525923, -0.3956894730559419, 0.00959547133607096],
    [0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.00959547133607096],
    [-0.3956894730559419, -0.8287699812525923, -0.3956894730559419, 0.00959547133607096],
    [0.3956894730559419, 0.8287699812525923, 0.3956894730559419, 0.00959547133607096],
    [0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.00959547133607096],
    [-0.8287699812525923, 0.3956894730559419, 0.3956894730559419, 0.00959547133607096],
    [0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.00959547133607096],
    [0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.00959547133607096],
    [-0.8287699812525923, -0.3956894730559419, 0.3956894730559419, 0.00959547133607096],
    [-0.8287699812525923, 0.3956894730559419, -0.3956894730559419, 0.00959547133607096],
    [0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.00959547133607096],
    [-0.8287699812525923, -0.3956894730559419, -0.3956894730559419, 0.00959547133607096],
    [0.4783690288121502, 0.8781589106040661, 0.0, 0.009694996361663027],
    [-0.4783690288121502, 0.8781589106040661, 0.0, 0.009694996361663027],
    [0.4783690288121502, -0.8781589106040661, 0.0, 0.009694996361663027],
    [-0.4783690288121502, -0.8781589106040661, 0.0, 0.009694996361663027],
    [0.8781589106040661, 0.4783690288121502, 0.0, 0.009694996361663027],
    [-0.8781589106040661, 0.4783690288121502, 0.0, 0.009694996361663027],
    [0.8781589106040661, -0.4783690288121502, 0.0, 0.009694996361663027],
    [-0.8781589106040661, -0.4783690288121502, 0.0, 0.009694996361663027],
    [0.4783690288121502, 0.0, 0.8781589106040661, 0.009694996361663027],
    [-0.4783690288121502, 0.0, 0.8781589106040661, 0.009694996361663027],
    [0.4783690288121502, 0.0, -0.8781589106040661, 0.009694996361663027],
    [-0.4783690288121502, 0.0, -0.8781589106040661, 0.009694996361663027],
    [0.8781589106040661, 0.0, 0.4783690288121502, 0.009694996361663027],
    [-0.8781589106040661, 0.0, 0.4783690288121502, 0.009694996361663027],
    [0.8781589106040661, 0.0, -0.4783690288121502, 0.009694996361663027],
    [-0.8781589106040661, 0.0, -0.4783690288121502, 0.009694996361663027],
    [0.0, 0.4783690288121502, 0.8781589106040661, 0.009694996361663027],
    [0.0, -0.4783690288121502, 0.8781589106040661, 0.009694996361663027],
    [0.0, 0.4783690288121502, -0.8781589106040661, 0.009694996361663027],
    [0.0, -0.4783690288121502, -0.8781589106040661, 0.009694996361663027],
    [0.0, 0.8781589106040661, 0.4783690288121502, 0.009694996361663027],
    [0.0, -0.8781589106040661, 0.4783690288121502, 0.009694996361663027],
    [0.0, 0.8781589106040661, -0.4783690288121502, 0.009694996361663027],
    [0.0, -0.8781589106040661, -0.4783690288121502, 0.009694996361663027],
];

pub(super) static LEBEDEV_194: [[f64; 4]; 194] = [
    [1.0, 0.0, 0.0, 0.001782340447244611],
    [-1.0, 0.0, 0.0, 0.001782340447244611],
    [0.0, 1.0, 0.0, 0.001782340447244611],
    [0.0, -1.0, 0.0, 0.001782340447244611],
    [0.0, 0.0, 1.0, 0.001782340447244611],
    [0.0, 0.0, -1.0, 0.001782340447244611],
    [0.0, 0.7071067811865476, 0.7071067811865476, 0.005716905949977102],
    [0.0, -0.7071067811865476, 0.7071067811865476, 0.005716905949977102],
    [0.0, 0.7071067811865476, -0.7071067811865476, 0.005716905949977102],
    [0.0, -0.7071067811865476, -0.7071067811865476, 0.005716905949977102],
    [0.7071067811865476, 0.0, 0.7071067811865476, 0.005716905949977102],
    [0.7071067811865476, 0.0, -0.7071067811865476, 0.005716905949977102],
    [-0.7071067811865476, 0.0, 0.7071067811865476, 0.005716905949977102],
    [-0.7071067811865476, 0.0, -0.7071067811865476, 0.005716905949977102],
    [0.7071067811865476, 0.7071067811865476, 0.0, 0.005716905949977102],
    [-0.7071067811865476, 0.7071067811865476, 0.0, 0.005716905949977102],
    [0.7071067811865476, -0.7071067811865476, 0.0, 0.005716905949977102],
    [-0.7071067811865476, -0.7071067811865476, 0.0, 0.005716905949977102],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.005573383178848737],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.005573383178848737],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.005573383178848737],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.005573383178848737],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.005573383178848737],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.005573383178848737],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.005573383178848737],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.005573383178848737],
    [0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.005608704082587997],
    [-0.6712973442695226, 0.6712973442695226, 0.3141969941825863, 0.005608704082587997],
    [0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.005608704082587997],
    [0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.005608704082587997],
    [-0.6712973442695226, -0.6712973442695226, 0.3141969941825863, 0.005608704082587997],
    [-0.6712973442695226, 0.6712973442695226, -0.3141969941825863, 0.005608704082587997],
    [0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.005608704082587997],
    [-0.6712973442695226, -0.6712973442695226, -0.3141969941825863, 0.005608704082587997],
    [-0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.005608704082587997],
    [0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.005608704082587997],
    [0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.005608704082587997],
    [-0.6712973442695226, -0.3141969941825863, 0.6712973442695226, 0.005608704082587997],
    [-0.6712973442695226, 0.3141969941825863, -0.6712973442695226, 0.005608704082587997],
    [0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.005608704082587997],
    [-0.6712973442695226, -0.3141969941825863, -0.6712973442695226, 0.005608704082587997],
    [0.6712973442695226, 0.3141969941825863, 0.6712973442695226, 0.005608704082587997],
    [0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.005608704082587997],
    [-0.3141969941825863, 0.6712973442695226, 0.6712973442695226, 0.005608704082587997],
    [0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.005608704082587997],
    [0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.005608704082587997],
    [-0.3141969941825863, -0.6712973442695226, 0.6712973442695226, 0.005608704082587997],
    [-0.3141969941825863, 0.6712973442695226, -0.6712973442695226, 0.005608704082587997],
    [0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.005608704082587997],
    [-0.3141969941825863, -0.6712973442695226, -0.6712973442695226, 0.005608704082587997],
    [0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.005158237711805383],
    [-0.2892465627575439, 0.2892465627575439, 0.9125090968674737, 0.005158237711805383],
    [0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.005158237711805383],
    [0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.005158237711805383],
    [-0.2892465627575439, -0.2892465627575439, 0.9125090968674737, 0.005158237711805383],
    [-0.2892465627575439, 0.2892465627575439, -0.9125090968674737, 0.005158237711805383],
    [0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.005158237711805383],
    [-0.2892465627575439, -0.2892465627575439, -0.9125090968674737, 0.005158237711805383],
    [-0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.005158237711805383],
    [0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.005158237711805383],
    [0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.005158237711805383],
    [-0.2892465627575439, -0.9125090968674737, 0.2892465627575439, 0.005158237711805383],
    [-0.2892465627575439, 0.9125090968674737, -0.2892465627575439, 0.005158237711805383],
    [0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.005158237711805383],
    [-0.2892465627575439, -0.9125090968674737, -0.2892465627575439, 0.005158237711805383],
    [0.2892465627575439, 0.9125090968674737, 0.2892465627575439, 0.005158237711805383],
    [0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.005158237711805383],
    [-0.9125090968674737, 0.2892465627575439, 0.2892465627575439, 0.005158237711805383],
    [0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.005158237711805383],
    [0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.005158237711805383],
    [-0.9125090968674737, -0.2892465627575439, 0.2892465627575439, 0.005158237711805383],
    [-0.9125090968674737, 0.2892465627575439, -0.2892465627575439, 0.005158237711805383],
    [0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.005158237711805383],
    [-0.9125090968674737, -0.2892465627575439, -0.2892465627575439, 0.005158237711805383],
    [0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.005518771467273614],
    [-0.4446933178717437, 0.4446933178717437, 0.7774932193147671, 0.005518771467273614],
    [0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.005518771467273614],
    [0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.005518771467273614],
    [-0.4446933178717437, -0.4446933178717437, 0.7774932193147671, 0.005518771467273614],
    [-0.4446933178717437, 0.4446933178717437, -0.7774932193147671, 0.005518771467273614],
    [0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.005518771467273614],
    [-0.4446933178717437, -0.4446933178717437, -0.7774932193147671, 0.005518771467273614],
    [-0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.005518771467273614],
    [0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.005518771467273614],
    [0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.005518771467273614],
    [-0.4446933178717437, -0.7774932193147671, 0.4446933178717437, 0.005518771467273614],
    [-0.4446933178717437, 0.7774932193147671, -0.4446933178717437, 0.005518771467273614],
    [0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.005518771467273614],
    [-0.4446933178717437, -0.7774932193147671, -0.4446933178717437, 0.005518771467273614],
    [0.4446933178717437, 0.7774932193147671, 0.4446933178717437, 0.005518771467273614],
    [0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.005518771467273614],
    [-0.7774932193147671, 0.4446933178717437, 0.4446933178717437, 0.005518771467273614],
    [0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.005518771467273614],
    [0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.005518771467273614],
    [-0.7774932193147671, -0.4446933178717437, 0.4446933178717437, 0.005518771467273614],
    [-0.7774932193147671, 0.4446933178717437, -0.4446933178717437, 0.005518771467273614],
    [0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.005518771467273614],
    [-0.7774932193147671, -0.4446933178717437, -0.4446933178717437, 0.005518771467273614],
    [0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.004106777028169394],
    [-0.1299335447650067, 0.1299335447650067, 0.9829723027072532, 0.004106777028169394],
    [0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.004106777028169394],
    [0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.004106777028169394],
    [-0.1299335447650067, -0.1299335447650067, 0.9829723027072532, 0.004106777028169394],
    [-0.1299335447650067, 0.1299335447650067, -0.9829723027072532, 0.004106777028169394],
    [0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.004106777028169394],
    [-0.1299335447650067, -0.1299335447650067, -0.9829723027072532, 0.004106777028169394],
    [-0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.004106777028169394],
    [0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.004106777028169394],
    [0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.004106777028169394],
    [-0.1299335447650067, -0.9829723027072532, 0.1299335447650067, 0.004106777028169394],
    [-0.1299335447650067, 0.9829723027072532, -0.1299335447650067, 0.004106777028169394],
    [0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.004106777028169394],
    [-0.1299335447650067, -0.9829723027072532, -0.1299335447650067, 0.004106777028169394],
    [0.1299335447650067, 0.9829723027072532, 0.1299335447650067, 0.004106777028169394],
    [0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.004106777028169394],
    [-0.9829723027072532, 0.1299335447650067, 0.1299335447650067, 0.004106777028169394],
    [0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.004106777028169394],
    [0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.004106777028169394],
    [-0.9829723027072532, -0.1299335447650067, 0.1299335447650067, 0.004106777028169394],
    [-0.9829723027072532, 0.1299335447650067, -0.1299335447650067, 0.004106777028169394],
    [0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.004106777028169394],
    [-0.9829723027072532, -0.1299335447650067, -0.1299335447650067, 0.004106777028169394],
    [0.3457702197611283, 0.9383192181375916, 0.0, 0.005051846064614808],
    [-0.3457702197611283, 0.9383192181375916, 0.0, 0.005051846064614808],
    [0.3457702197611283, -0.9383192181375916, 0.0, 0.005051846064614808],
    [-0.3457702197611283, -0.9383192181375916, 0.0, 0.005051846064614808],
    [0.9383192181375916, 0.3457702197611283, 0.0, 0.005051846064614808],
    [-0.9383192181375916, 0.3457702197611283, 0.0, 0.005051846064614808],
    [0.9383192181375916, -0.3457702197611283, 0.0, 0.005051846064614808],
    [-0.9383192181375916, -0.3457702197611283, 0.0, 0.005051846064614808],
    [0.3457702197611283, 0.0, 0.9383192181375916, 0.005051846064614808],
    [-0.3457702197611283, 0.0, 0.9383192181375916, 0.005051846064614808],
    [0.3457702197611283, 0.0, -0.9383192181375916, 0.005051846064614808],
    [-0.3457702197611283, 0.0, -0.9383192181375916, 0.005051846064614808],
    [0.9383192181375916, 0.0, 0.3457702197611283, 0.005051846064614808],
    [-0.9383192181375916, 0.0, 0.3457702197611283, 0.005051846064614808],
    [0.9383192181375916, 0.0, -0.3457702197611283, 0.005051846064614808],
    [-0.9383192181375916, 0.0, -0.3457702197611283, 0.005051846064614808],
    [0.0, 0.3457702197611283, 0.9383192181375916, 0.005051846064614808],
    [0.0, -0.3457702197611283, 0.9383192181375916, 0.005051846064614808],
    [0.0, 0.3457702197611283, -0.9383192181375916, 0.005051846064614808],
    [0.0, -0.3457702197611283, -0.9383192181375916, 0.005051846064614808],
    [0.0, 0.9383192181375916, 0.3457702197611283, 0.005051846064614808],
    [0.0, -0.9383192181375916, 0.3457702197611283, 0.005051846064614808],
    [0.0, 0.9383192181375916, -0.3457702197611283, 0.005051846064614808],
    [0.0, -0.9383192181375916, -0.3457702197611283, 0.005051846064614808],
    [0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.005530248916233094],
    [-0.159041710538353, 0.8360360154824589, 0.525118572443642, 0.005530248916233094],
    [0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.005530248916233094],
    [0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.005530248916233094],
    [-0.159041710538353, -0.8360360154824589, 0.525118572443642, 0.005530248916233094],
    [0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.005530248916233094],
    [-0.159041710538353, 0.8360360154824589, -0.525118572443642, 0.005530248916233094],
    [-0.159041710538353, -0.8360360154824589, -0.525118572443642, 0.005530248916233094],
    [0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.005530248916233094],
    [-0.8360360154824589, 0.159041710538353, 0.525118572443642, 0.005530248916233094],
    [0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.005530248916233094],
    [0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.005530248916233094],
    [-0.8360360154824589, -0.159041710538353, 0.525118572443642, 0.005530248916233094],
    [0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.005530248916233094],
    [-0.8360360154824589, 0.159041710538353, -0.525118572443642, 0.005530248916233094],
    [-0.8360360154824589, -0.159041710538353, -0.525118572443642, 0.005530248916233094],
    [0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.005530248916233094],
    [-0.525118572443642, 0.159041710538353, 0.8360360154824589, 0.005530248916233094],
    [0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.005530248916233094],
    [0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.005530248916233094],
    [-0.525118572443642, -0.159041710538353, 0.8360360154824589, 0.005530248916233094],
    [0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.005530248916233094],
    [-0.525118572443642, 0.159041710538353, -0.8360360154824589, 0.005530248916233094],
    [-0.525118572443642, -0.159041710538353, -0.8360360154824589, 0.005530248916233094],
    [0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.005530248916233094],
    [-0.525118572443642, 0.8360360154824589, 0.159041710538353, 0.005530248916233094],
    [0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.005530248916233094],
    [0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.005530248916233094],
    [-0.525118572443642, -0.8360360154824589, 0.159041710538353, 0.005530248916233094],
    [0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.005530248916233094],
    [-0.525118572443642, 0.8360360154824589, -0.159041710538353, 0.005530248916233094],
    [-0.525118572443642, -0.8360360154824589, -0.159041710538353, 0.005530248916233094],
    [0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.005530248916233094],
    [-0.159041710538353, 0.525118572443642, 0.8360360154824589, 0.005530248916233094],
    [0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.005530248916233094],
    [0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.005530248916233094],
    [-0.159041710538353, -0.525118572443642, 0.8360360154824589, 0.005530248916233094],
    [0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.005530248916233094],
    [-0.159041710538353, 0.525118572443642, -0.8360360154824589, 0.005530248916233094],
    [-0.159041710538353, -0.525118572443642, -0.8360360154824589, 0.005530248916233094],
    [0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.005530248916233094],
    [-0.8360360154824589, 0.525118572443642, 0.159041710538353, 0.005530248916233094],
    [0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.005530248916233094],
    [0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.005530248916233094],
    [-0.8360360154824589, -0.525118572443642, 0.159041710538353, 0.005530248916233094],
    [0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.005530248916233094],
    [-0.8360360154824589, 0.525118572443642, -0.159041710538353, 0.005530248916233094],
    [-0.8360360154824589, -0.525118572443642, -0.159041710538353, 0.005530248916233094],
];

pub(super) static LEBEDEV_302: [[f64; 4]; 302] = [
    [1.0, 0.0, 0.0, 0.0008545911725128148],
    [-1.0, 0.0, 0.0, 0.0008545911725128148],
    [0.0, 1.0, 0.0, 0.0008545911725128148],
    [0.0, -1.0, 0.0, 0.0008545911725128148],
    [0.0, 0.0, 1.0, 0.0008545911725128148],
    [0.0, 0.0, -1.0, 0.0008545911725128148],
    [0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.003599119285025571],
    [-0.5773502691896257, 0.5773502691896257, 0.5773502691896257, 0.003599119285025571],
    [0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.003599119285025571],
    [0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.003599119285025571],
    [-0.5773502691896257, -0.5773502691896257, 0.5773502691896257, 0.003599119285025571],
    [0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.003599119285025571],
    [-0.5773502691896257, 0.5773502691896257, -0.5773502691896257, 0.003599119285025571],
    [-0.5773502691896257, -0.5773502691896257, -0.5773502691896257, 0.003599119285025571],
    [0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.003449788424305883],
    [-0.3515640345570105, 0.3515640345570105, 0.8676436245440834, 0.003449788424305883],
    [0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.003449788424305883],
    [0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.003449788424305883],
    [-0.3515640345570105, -0.3515640345570105, 0.8676436245440834, 0.003449788424305883],
    [-0.3515640345570105, 0.3515640345570105, -0.8676436245440834, 0.003449788424305883],
    [0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.003449788424305883],
    [-0.3515640345570105, -0.3515640345570105, -0.8676436245440834, 0.003449788424305883],
    [-0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.003449788424305883],
    [0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.003449788424305883],
    [0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.003449788424305883],
    [-0.3515640345570105, -0.8676436245440834, 0.3515640345570105, 0.003449788424305883],
    [-0.3515640345570105, 0.8676436245440834, -0.3515640345570105, 0.003449788424305883],
    [0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.003449788424305883],
    [-0.3515640345570105, -0.8676436245440834, -0.3515640345570105, 0.003449788424305883],
    [0.3515640345570105, 0.8676436245440834, 0.3515640345570105, 0.003449788424305883],
    [0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.003449788424305883],
    [-0.8676436245440834, 0.3515640345570105, 0.3515640345570105, 0.003449788424305883],
    [0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.003449788424305883],
    [0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.003449788424305883],
    [-0.8676436245440834, -0.3515640345570105, 0.3515640345570105, 0.003449788424305883],
    [-0.8676436245440834, 0.3515640345570105, -0.3515640345570105, 0.003449788424305883],
    [0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.003449788424305883],
    [-0.8676436245440834, -0.3515640345570105, -0.3515640345570105, 0.003449788424305883],
    [0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.003604822601419882],
    [-0.6566329410219612, 0.6566329410219612, 0.37103417838482095, 0.003604822601419882],
    [0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.003604822601419882],
    [0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.003604822601419882],
    [-0.6566329410219612, -0.6566329410219612, 0.37103417838482095, 0.003604822601419882],
    [-0.6566329410219612, 0.6566329410219612, -0.37103417838482095, 0.003604822601419882],
    [0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.003604822601419882],
    [-0.6566329410219612, -0.6566329410219612, -0.37103417838482095, 0.003604822601419882],
    [-0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.003604822601419882],
    [0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.003604822601419882],
    [0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.003604822601419882],
    [-0.6566329410219612, -0.37103417838482095, 0.6566329410219612, 0.003604822601419882],
    [-0.6566329410219612, 0.37103417838482095, -0.6566329410219612, 0.003604822601419882],
    [0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.003604822601419882],
    [-0.6566329410219612, -0.37103417838482095, -0.6566329410219612, 0.003604822601419882],
    [0.6566329410219612, 0.37103417838482095, 0.6566329410219612, 0.003604822601419882],
    [0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.003604822601419882],
    [-0.37103417838482095, 0.6566329410219612, 0.6566329410219612, 0.003604822601419882],
    [0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.003604822601419882],
    [0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.003604822601419882],
    [-0.37103417838482095, -0.6566329410219612, 0.6566329410219612, 0.003604822601419882],
    [-0.37103417838482095, 0.6566329410219612, -0.6566329410219612, 0.003604822601419882],
    [0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.003604822601419882],
    [-0.37103417838482095, -0.6566329410219612, -0.6566329410219612, 0.003604822601419882],
    [0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.003576729661743367],
    [-0.4729054132581005, 0.4729054132581005, 0.7434520429875557, 0.003576729661743367],
    [0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.003576729661743367],
    [0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.003576729661743367],
    [-0.4729054132581005, -0.4729054132581005, 0.7434520429875557, 0.003576729661743367],
    [-0.4729054132581005, 0.4729054132581005, -0.7434520429875557, 0.003576729661743367],
    [0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.003576729661743367],
    [-0.4729054132581005, -0.4729054132581005, -0.7434520429875557, 0.003576729661743367],
    [-0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.003576729661743367],
    [0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.003576729661743367],
    [0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.003576729661743367],
    [-0.4729054132581005, -0.7434520429875557, 0.4729054132581005, 0.003576729661743367],
    [-0.4729054132581005, 0.7434520429875557, -0.4729054132581005, 0.003576729661743367],
    [0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.003576729661743367],
    [-0.4729054132581005, -0.7434520429875557, -0.4729054132581005, 0.003576729661743367],
    [0.4729054132581005, 0.7434520429875557, 0.4729054132581005, 0.003576729661743367],
    [0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.003576729661743367],
    [-0.7434520429875557, 0.4729054132581005, 0.4729054132581005, 0.003576729661743367],
    [0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.003576729661743367],
    [0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.003576729661743367],
    [-0.7434520429875557, -0.4729054132581005, 0.4729054132581005, 0.003576729661743367],
    [-0.7434520429875557, 0.4729054132581005, -0.4729054132581005, 0.003576729661743367],
    [0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.003576729661743367],
    [-0.7434520429875557, -0.4729054132581005, -0.4729054132581005, 0.003576729661743367],
    [0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.002352101413689164],
    [-0.09618308522614784, 0.09618308522614784, 0.9907056213794081, 0.002352101413689164],
    [0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.002352101413689164],
    [0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.002352101413689164],
    [-0.09618308522614784, -0.09618308522614784, 0.9907056213794081, 0.002352101413689164],
    [-0.09618308522614784, 0.09618308522614784, -0.9907056213794081, 0.002352101413689164],
    [0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.002352101413689164],
    [-0.09618308522614784, -0.09618308522614784, -0.9907056213794081, 0.002352101413689164],
    [-0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.002352101413689164],
    [0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.002352101413689164],
    [0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.002352101413689164],
    [-0.09618308522614784, -0.9907056213794081, 0.09618308522614784, 0.002352101413689164],
    [-0.09618308522614784, 0.9907056213794081, -0.09618308522614784, 0.002352101413689164],
    [0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.002352101413689164],
    [-0.09618308522614784, -0.9907056213794081, -0.09618308522614784, 0.002352101413689164],
    [0.09618308522614784, 0.9907056213794081, 0.09618308522614784, 0.002352101413689164],
    [0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.002352101413689164],
    [-0.9907056213794081, 0.09618308522614784, 0.09618308522614784, 0.002352101413689164],
    [0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.002352101413689164],
    [0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.002352101413689164],
    [-0.9907056213794081, -0.09618308522614784, 0.09618308522614784, 0.002352101413689164],
    [-0.9907056213794081, 0.09618308522614784, -0.09618308522614784, 0.002352101413689164],
    [0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.002352101413689164],
    [-0.9907056213794081, -0.09618308522614784, -0.09618308522614784, 0.002352101413689164],
    [0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.003108953122413675],
    [-0.2219645236294178, 0.2219645236294178, 0.9494543172264431, 0.003108953122413675],
    [0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.003108953122413675],
    [0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.003108953122413675],
    [-0.2219645236294178, -0.2219645236294178, 0.9494543172264431, 0.003108953122413675],
    [-0.2219645236294178, 0.2219645236294178, -0.9494543172264431, 0.003108953122413675],
    [0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.003108953122413675],
    [-0.2219645236294178, -0.2219645236294178, -0.9494543172264431, 0.003108953122413675],
    [-0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.003108953122413675],
    [0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.003108953122413675],
    [0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.003108953122413675],
    [-0.2219645236294178, -0.9494543172264431, 0.2219645236294178, 0.003108953122413675],
    [-0.2219645236294178, 0.9494543172264431, -0.2219645236294178, 0.003108953122413675],
    [0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.003108953122413675],
    [-0.2219645236294178, -0.9494543172264431, -0.2219645236294178, 0.003108953122413675],
    [0.2219645236294178, 0.9494543172264431, 0.2219645236294178, 0.003108953122413675],
    [0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.003108953122413675],
    [-0.9494543172264431, 0.2219645236294178, 0.2219645236294178, 0.003108953122413675],
    [0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.003108953122413675],
    [0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.003108953122413675],
    [-0.9494543172264431, -0.2219645236294178, 0.2219645236294178, 0.003108953122413675],
    [-0.9494543172264431, 0.2219645236294178, -0.2219645236294178, 0.003108953122413675],
    [0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.003108953122413675],
    [-0.9494543172264431, -0.2219645236294178, -0.2219645236294178, 0.003108953122413675],
    [0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.003650045807677255],
    [-0.7011766416089545, 0.7011766416089545, 0.12923867271051442, 0.003650045807677255],
    [0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.003650045807677255],
    [0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.003650045807677255],
    [-0.7011766416089545, -0.7011766416089545, 0.12923867271051442, 0.003650045807677255],
    [-0.7011766416089545, 0.7011766416089545, -0.12923867271051442, 0.003650045807677255],
    [0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.003650045807677255],
    [-0.7011766416089545, -0.7011766416089545, -0.12923867271051442, 0.003650045807677255],
    [-0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.003650045807677255],
    [0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.003650045807677255],
    [0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.003650045807677255],
    [-0.7011766416089545, -0.12923867271051442, 0.7011766416089545, 0.003650045807677255],
    [-0.7011766416089545, 0.12923867271051442, -0.7011766416089545, 0.003650045807677255],
    [0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.003650045807677255],
    [-0.7011766416089545, -0.12923867271051442, -0.7011766416089545, 0.003650045807677255],
    [0.7011766416089545, 0.12923867271051442, 0.7011766416089545, 0.003650045807677255],
    [0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.003650045807677255],
    [-0.12923867271051442, 0.7011766416089545, 0.7011766416089545, 0.003650045807677255],
    [0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.003650045807677255],
    [0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.003650045807677255],
    [-0.12923867271051442, -0.7011766416089545, 0.7011766416089545, 0.003650045807677255],
    [-0.12923867271051442, 0.7011766416089545, -0.7011766416089545, 0.003650045807677255],
    [0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.003650045807677255],
    [-0.12923867271051442, -0.7011766416089545, -0.7011766416089545, 0.003650045807677255],
    [0.2644152887060663, 0.964408914879206, 0.0, 0.002982344963171804],
    [-0.2644152887060663, 0.964408914879206, 0.0, 0.002982344963171804],
    [0.2644152887060663, -0.964408914879206, 0.0, 0.002982344963171804],
    [-0.2644152887060663, -0.964408914879206, 0.0, 0.002982344963171804],
    [0.964408914879206, 0.2644152887060663, 0.0, 0.002982344963171804],
    [-0.964408914879206, 0.2644152887060663, 0.0, 0.002982344963171804],
    [0.964408914879206, -0.2644152887060663, 0.0, 0.002982344963171804],
    [-0.964408914879206, -0.2644152887060663, 0.0, 0.002982344963171804],
    [0.2644152887060663, 0.0, 0.964408914879206, 0.002982344963171804],
    [-0.2644152887060663, 0.0, 0.964408914879206, 0.002982344963171804],
    [0.2644152887060663, 0.0, -0.964408914879206, 0.002982344963171804],
    [-0.2644152887060663, 0.0, -0.964408914879206, 0.002982344963171804],
    [0.964408914879206, 0.0, 0.2644152887060663, 0.002982344963171804],
    [-0.964408914879206, 0.0, 0.2644152887060663, 0.002982344963171804],
    [0.964408914879206, 0.0, -0.2644152887060663, 0.002982344963171804],
    [-0.964408914879206, 0.0, -0.2644152887060663, 0.002982344963171804],
    [0.0, 0.2644152887060663, 0.964408914879206, 0.002982344963171804],
    [0.0, -0.2644152887060663, 0.964408914879206, 0.002982344963171804],
    [0.0, 0.2644152887060663, -0.964408914879206, 0.002982344963171804],
    [0.0, -0.2644152887060663, -0.964408914879206, 0.002982344963171804],
    [0.0, 0.964408914879206, 0.2644152887060663, 0.002982344963171804],
    [0.0, -0.964408914879206, 0.2644152887060663, 0.002982344963171804],
    [0.0, 0.964408914879206, -0.2644152887060663, 0.002982344963171804],
    [0.0, -0.964408914879206, -0.2644152887060663, 0.002982344963171804],
    [0.5718955891878961, 0.8203264198277593, 0.0, 0.00360082093221646],
    [-0.5718955891878961, 0.8203264198277593, 0.0, 0.00360082093221646],
    [0.5718955891878961, -0.8203264198277593, 0.0, 0.00360082093221646],
    [-0.5718955891878961, -0.8203264198277593, 0.0, 0.00360082093221646],
    [0.8203264198277593, 0.5718955891878961, 0.0, 0.00360082093221646],
    [-0.8203264198277593, 0.5718955891878961, 0.0, 0.00360082093221646],
    [0.8203264198277593, -0.5718955891878961, 0.0, 0.00360082093221646],
    [-0.8203264198277593, -0.5718955891878961, 0.0, 0.00360082093221646],
    [0.5718955891878961, 0.0, 0.8203264198277593, 0.00360082093221646],
    [-0.5718955891878961, 0.0, 0.8203264198277593, 0.00360082093221646],
    [0.5718955891878961, 0.0, -0.8203264198277593, 0.00360082093221646],
    [-0.5718955891878961, 0.0, -0.8203264198277593, 0.00360082093221646],
    [0.8203264198277593, 0.0, 0.5718955891878961, 0.00360082093221646],
    [-0.8203264198277593, 0.0, 0.5718955891878961, 0.00360082093221646],
    [0.8203264198277593, 0.0, -0.5718955891878961, 0.00360082093221646],
    [-0.8203264198277593, 0.0, -0.5718955891878961, 0.00360082093221646],
    [0.0, 0.5718955891878961, 0.8203264198277593, 0.00360082093221646],
    [0.0, -0.5718955891878961, 0.8203264198277593, 0.00360082093221646],
    [0.0, 0.5718955891878961, -0.8203264198277593, 0.00360082093221646],
    [0.0, -0.5718955891878961, -0.8203264198277593, 0.00360082093221646],
    [0.0, 0.8203264198277593, 0.5718955891878961, 0.00360082093221646],
    [0.0, -0.8203264198277593, 0.5718955891878961, 0.00360082093221646],
    [0.0, 0.8203264198277593, -0.5718955891878961, 0.00360082093221646],
    [0.0, -0.8203264198277593, -0.5718955891878961, 0.00360082093221646],
    [0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.003571540554273387],
    [-0.2510034751770465, 0.8000727494073951, 0.5448677372580774, 0.003571540554273387],
    [0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.003571540554273387],
    [0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.003571540554273387],
    [-0.2510034751770465, -0.8000727494073951, 0.5448677372580774, 0.003571540554273387],
    [0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.003571540554273387],
    [-0.2510034751770465, 0.8000727494073951, -0.5448677372580774, 0.003571540554273387],
    [-0.2510034751770465, -0.8000727494073951, -0.5448677372580774, 0.003571540554273387],
    [0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.003571540554273387],
    [-0.8000727494073951, 0.2510034751770465, 0.5448677372580774, 0.003571540554273387],
    [0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.003571540554273387],
    [0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.003571540554273387],
    [-0.8000727494073951, -0.2510034751770465, 0.5448677372580774, 0.003571540554273387],
    [0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.003571540554273387],
    [-0.8000727494073951, 0.2510034751770465, -0.5448677372580774, 0.003571540554273387],
    [-0.8000727494073951, -0.2510034751770465, -0.5448677372580774, 0.003571540554273387],
    [0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.003571540554273387],
    [-0.5448677372580774, 0.2510034751770465, 0.8000727494073951, 0.003571540554273387],
    [0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.003571540554273387],
    [0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.003571540554273387],
    [-0.5448677372580774, -0.2510034751770465, 0.8000727494073951, 0.003571540554273387],
    [0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.003571540554273387],
    [-0.5448677372580774, 0.2510034751770465, -0.8000727494073951, 0.003571540554273387],
    [-0.5448677372580774, -0.2510034751770465, -0.8000727494073951, 0.003571540554273387],
    [0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.003571540554273387],
    [-0.5448677372580774, 0.8000727494073951, 0.2510034751770465, 0.003571540554273387],
    [0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.003571540554273387],
    [0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.003571540554273387],
    [-0.5448677372580774, -0.8000727494073951, 0.2510034751770465, 0.003571540554273387],
    [0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.003571540554273387],
    [-0.5448677372580774, 0.8000727494073951, -0.2510034751770465, 0.003571540554273387],
    [-0.5448677372580774, -0.8000727494073951, -0.2510034751770465, 0.003571540554273387],
    [0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.003571540554273387],
    [-0.2510034751770465, 0.5448677372580774, 0.8000727494073951, 0.003571540554273387],
    [0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.003571540554273387],
    [0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.003571540554273387],
    [-0.2510034751770465, -0.5448677372580774, 0.8000727494073951, 0.003571540554273387],
    [0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.003571540554273387],
    [-0.2510034751770465, 0.5448677372580774, -0.8000727494073951, 0.003571540554273387],
    [-0.2510034751770465, -0.5448677372580774, -0.8000727494073951, 0.003571540554273387],
    [0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.003571540554273387],
    [-0.8000727494073951, 0.5448677372580774, 0.2510034751770465, 0.003571540554273387],
    [0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.003571540554273387],
    [0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.003571540554273387],
    [-0.8000727494073951, -0.5448677372580774, 0.2510034751770465, 0.003571540554273387],
    [0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.003571540554273387],
    [-0.8000727494073951, 0.5448677372580774, -0.2510034751770465, 0.003571540554273387],
    [-0.8000727494073951, -0.5448677372580774, -0.2510034751770465, 0.003571540554273387],
    [0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.00339231220500617],
    [-0.1233548532583327, 0.4127724083168531, 0.9024425295330004, 0.00339231220500617],
    [0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.00339231220500617],
    [0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.00339231220500617],
    [-0.1233548532583327, -0.4127724083168531, 0.9024425295330004, 0.00339231220500617],
    [0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.00339231220500617],
    [-0.1233548532583327, 0.4127724083168531, -0.9024425295330004, 0.00339231220500617],
    [-0.1233548532583327, -0.4127724083168531, -0.9024425295330004, 0.00339231220500617],
    [0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.00339231220500617],
    [-0.4127724083168531, 0.1233548532583327, 0.9024425295330004, 0.00339231220500617],
    [0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.00339231220500617],
    [0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.00339231220500617],
    [-0.4127724083168531, -0.1233548532583327, 0.9024425295330004, 0.00339231220500617],
    [0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.00339231220500617],
    [-0.4127724083168531, 0.1233548532583327, -0.9024425295330004, 0.00339231220500617],
    [-0.4127724083168531, -0.1233548532583327, -0.9024425295330004, 0.00339231220500617],
    [0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.00339231220500617],
    [-0.9024425295330004, 0.1233548532583327, 0.4127724083168531, 0.00339231220500617],
    [0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.00339231220500617],
    [0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.00339231220500617],
    [-0.9024425295330004, -0.1233548532583327, 0.4127724083168531, 0.00339231220500617],
    [0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.00339231220500617],
    [-0.9024425295330004, 0.1233548532583327, -0.4127724083168531, 0.00339231220500617],
    [-0.9024425295330004, -0.1233548532583327, -0.4127724083168531, 0.00339231220500617],
    [0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.00339231220500617],
    [-0.9024425295330004, 0.4127724083168531, 0.1233548532583327, 0.00339231220500617],
    [0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.00339231220500617],
    [0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.00339231220500617],
    [-0.9024425295330004, -0.4127724083168531, 0.1233548532583327, 0.00339231220500617],
    [0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.00339231220500617],
    [-0.9024425295330004, 0.4127724083168531, -0.1233548532583327, 0.00339231220500617],
    [-0.9024425295330004, -0.4127724083168531, -0.1233548532583327, 0.00339231220500617],
    [0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.00339231220500617],
    [-0.1233548532583327, 0.9024425295330004, 0.4127724083168531, 0.00339231220500617],
    [0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.00339231220500617],
    [0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.00339231220500617],
    [-0.1233548532583327, -0.9024425295330004, 0.4127724083168531, 0.00339231220500617],
    [0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.00339231220500617],
    [-0.1233548532583327, 0.9024425295330004, -0.4127724083168531, 0.00339231220500617],
    [-0.1233548532583327, -0.9024425295330004, -0.4127724083168531, 0.00339231220500617],
    [0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.00339231220500617],
    [-0.4127724083168531, 0.9024425295330004, 0.1233548532583327, 0.00339231220500617],
    [0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.00339231220500617],
    [0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.00339231220500617],
    [-0.4127724083168531, -0.9024425295330004, 0.1233548532583327, 0.00339231220500617],
    [0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.00339231220500617],
    [-0.4127724083168531, 0.9024425295330004, -0.1233548532583327, 0.00339231220500617],
    [-0.4127724083168531, -0.9024425295330004, -0.1233548532583327, 0.00339231220500617],
];
