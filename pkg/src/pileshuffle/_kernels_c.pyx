# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels; mirrors _kernels_py, selected by kernels.py."""

import numpy as np


def check_scan(const long long[::1] piles, const long long[::1] pos,
               const unsigned char[::1] chi):
    cdef Py_ssize_t n = pos.shape[0]
    cdef Py_ssize_t s
    cdef long long need
    for s in range(n - 1):
        if chi[s]:
            need = piles[s] + (1 if pos[s + 1] > pos[s] else 0)
        else:
            need = piles[s] + (1 if pos[s + 1] < pos[s] else 0)
        if piles[s + 1] < need:
            return s + 1
    return 0


def minimal_scan(const long long[::1] pos, const unsigned char[::1] chi_schedule):
    cdef Py_ssize_t n = pos.shape[0]
    cdef Py_ssize_t budget = chi_schedule.shape[0]
    if n == 0:
        return np.empty(0, dtype=np.int64), 0
    if budget == 0:
        return None, 1
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] h = out
    cdef Py_ssize_t s
    cdef long long cur = 1
    cdef bint grow
    h[0] = 1
    for s in range(n - 1):
        if chi_schedule[cur - 1]:
            grow = pos[s + 1] > pos[s]
        else:
            grow = pos[s + 1] < pos[s]
        if grow:
            cur += 1
            if cur > budget:
                return None, s + 2
        h[s + 1] = cur
    return out, 0


def dealer_scan(const long long[::1] pos):
    cdef Py_ssize_t n = pos.shape[0]
    h_arr = np.empty(n, dtype=np.int64)
    chi_arr = np.empty(max(n, 1), dtype=np.uint8)
    if n == 0:
        return h_arr, chi_arr[:0]
    cdef long long[::1] h = h_arr
    cdef unsigned char[::1] chi = chi_arr
    cdef Py_ssize_t s
    cdef long long cur = 1
    cdef unsigned char cur_chi
    cdef bint grow
    cur_chi = 0 if (n == 1 or pos[1] > pos[0]) else 1
    chi[0] = cur_chi
    h[0] = 1
    for s in range(n - 1):
        if cur_chi:
            grow = pos[s + 1] > pos[s]
        else:
            grow = pos[s + 1] < pos[s]
        if grow:
            cur += 1
            cur_chi = 1 if (s + 2 < n and pos[s + 2] <= pos[s + 1]) else 0
            chi[cur - 1] = cur_chi
        h[s + 1] = cur
    return h_arr, chi_arr[:cur]


def readings_scan(const long long[::1] deck):
    cdef Py_ssize_t n = deck.shape[0]
    if n == 0:
        return 0
    cdef long long nxt = 1
    cdef long long passes = 0
    cdef Py_ssize_t i
    while nxt <= n:
        passes += 1
        for i in range(n):
            if deck[i] == nxt:
                nxt += 1
    return passes


def batch_descents(const long long[:, ::1] perms):
    cdef Py_ssize_t b = perms.shape[0]
    cdef Py_ssize_t n = perms.shape[1]
    out = np.zeros(b, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t i, s
    cdef long long c
    for i in range(b):
        c = 0
        for s in range(n - 1):
            if perms[i, s + 1] < perms[i, s]:
                c += 1
        o[i] = c
    return out


def batch_ascents(const long long[:, ::1] perms):
    cdef Py_ssize_t b = perms.shape[0]
    cdef Py_ssize_t n = perms.shape[1]
    out = np.zeros(b, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t i, s
    cdef long long c
    for i in range(b):
        c = 0
        for s in range(n - 1):
            if perms[i, s + 1] > perms[i, s]:
                c += 1
        o[i] = c
    return out


def batch_dealer_piles(const long long[:, ::1] perms):
    cdef Py_ssize_t b = perms.shape[0]
    cdef Py_ssize_t n = perms.shape[1]
    out = np.empty(b, dtype=np.int64)
    cdef long long[::1] o = out
    cdef Py_ssize_t i, s
    cdef long long cur
    cdef unsigned char cur_chi
    cdef bint grow
    if n <= 1:
        out[:] = n
        return out
    for i in range(b):
        cur = 1
        cur_chi = 0 if perms[i, 1] > perms[i, 0] else 1
        for s in range(n - 1):
            if cur_chi:
                grow = perms[i, s + 1] > perms[i, s]
            else:
                grow = perms[i, s + 1] < perms[i, s]
            if grow:
                cur += 1
                cur_chi = 1 if (s + 2 < n and perms[i, s + 2] <= perms[i, s + 1]) else 0
        o[i] = cur
    return out
