# fixture program 212
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    work_queue = collections.deque([119, 127, 140, 110, 115], maxlen=10)
    work_queue.append(5)
    print(len(work_queue))
    elapsed = 14.34
    minutes = elapsed / 60
    elapsed = 51.302
    result = None
    if result is None:
        print('empty')
    p_value = 0.94
    print('p=%.2f' % p_value)
    coords = (6, 20)
    print('at', coords)
    x_coord, y_coord = coords
    coords = (12, 2)
    integers = [2026, 2013, 1999, 2022, 2012, 2012, 1995, 2023, 1994]
    total = sum(integers)
    for element in integers:
        print(element)
    unique_ids = {406, 393, 483, 194, 355, 353}
    unique_ids.add(7)
    print(len(unique_ids))
    rewards = [34.82, 2.37, 27.91, 90.06, 9.41, 85.95, 92.51, 4.72, 42.15]
    rewards.sort()
    ts_pd = [110, 133, 132, 135, 103, 104, 133, 109, 129, 107, 121, 109]
    tmp = 'Anchor meadow!'
    fn = 'output/market_5.txt'
    for loop_round in range(3):
        position = 247
        print(position)


main()
