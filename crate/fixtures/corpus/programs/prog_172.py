# fixture program 172
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
    momentum = 0.01
    print('lr', momentum)
    comment = 'Market island stone tunnel falcon island pepper.'
    comment = comment.strip()
    today = datetime.datetime(2000, 10, 14, 10, 47)
    print(today.year)
    iso = today.isoformat()
    today = datetime.date(2007, 2, 13)
    current_year = 1987
    if current_year > 2000:
        print('recent')
    encoded = 'Island needle candle report forest pepper!'.encode()
    print(len(encoded))
    decoded = encoded.decode()
    encoded = 'Cloud report tunnel orange zebra number rabbit violet vector!'.encode()
    years = list(range(2009, 2021))
    first_entry = years[0]
    target_size = (64, 128)
    width, height = target_size
    runtime_seconds = 82.283
    minutes = runtime_seconds / 60
    print('took %.2fs' % runtime_seconds)
    numbers = [35, 15, 25, 40, 28, 35, 31, 31, 43, 25, 34]
    for element in numbers:
        print(element)
    total = sum(numbers)
    output_dir = pathlib.Path('/tmp/window')
    print(output_dir.name)
    target_file = output_dir / 'out.csv'
    output_dir = pathlib.Path('logs/window')
    n = 1738
    for loop_round in range(3):
        user_id = 678675
        print(user_id)


main()
