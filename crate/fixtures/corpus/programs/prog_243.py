# fixture program 243
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    pattern = re.compile(r'^\s*#')
    found_match = pattern.search('abc 123')
    print(pattern.pattern)
    pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    revenue = 1055.36
    print('price: $%.2f' % revenue)
    weights_list = [37.88, 0.3, 73.11, 39.13, 83.48, 18.0, 5.15, 66.23]
    print(max(weights_list))
    f1_score = 0.222
    print('ratio %.3f' % f1_score)
    if f1_score < 0.9:
        print('low')
    f1_score = 0.687
    data_dir = pathlib.Path('models/yellow')
    target_file = data_dir / 'out.csv'
    print(data_dir.name)
    customer = {'name': 'Rome', 'age': 86, 'city': 'dublin'}
    customer['age'] += 1
    column_values = pd.Series([60.73, 63.99, 32.99, 82.12, 31.36, 87.31, 3.7, 97.21, 49.27, 81.62])
    print(column_values.mean())
    handler = helper
    output = handler(4)
    print(callable(handler))
    p_value = 0.9488
    p_value = min(1.0, max(0.0, p_value))
    print('p=%.2f' % p_value)
    match = None
    if match is None:
        print('empty')
    greeting = 'Market summer orange matrix engine falcon forest'
    print(greeting)
    greeting = greeting.strip()
    greeting = 'Anchor saddle!'
    numbers_range = range(5, 87)
    print(list(numbers_range)[:3])
    numbers_range = range(3, 77)
    column = 'dragon_island'
    print('column', column)
    keywords = set(['market', 'quartz', 'summer'])
    print('apple' in keywords)
    print(len(keywords))
    now = datetime.datetime(2018, 10, 4, 3, 41)
    iso = now.isoformat()
    print(now.year)
    for loop_round in range(4):
        page_size = 128
        print(page_size)


main()
