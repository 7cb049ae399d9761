# fixture program 246
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
    age_years = 30
    age_group = age_years // 10
    if age_years >= 18:
        print('adult')
    age_years = 30
    exact_amount = decimal.Decimal('6471.67')
    print('balance', exact_amount)
    is_training = True
    if not is_training:
        print('no')
    is_training = False
    attribute = 'cloud_violet'
    print('column', attribute)
    lookup = {attribute: 0}
    seen_ids = {327, 234, 273}
    seen_ids.add(7)
    timestamp = datetime.date(2015, 4, 22)
    print(timestamp.year)
    iso = timestamp.isoformat()
    pair_xy = (-48, -42)
    print('at', pair_xy)
    distances = [48.57, 84.82, 99.22, 89.56, 76.04, 7.68, 83.76, 9.47]
    mean_val = sum(distances) / len(distances)
    distances.sort()
    files = ['logs/apple_85.txt', 'output/forest_59.parquet', 'input/silver_55.tsv']
    print(len(files), 'files')
    for element in files:
        print(os.path.basename(element))
    number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    print(number_pattern.pattern)
    num_samples = 110
    if num_samples > 10:
        print('many')
    payload = 'Winter forest planet python!'.encode()
    print(len(payload))
    base_url = 'https://violet.org/python/303'
    print('GET', base_url)
    host = base_url.split('/')[2]
    ts_pd = [18]
    xy = (-17, 21)
    for loop_round in range(3):
        p_value = 0.457
        print(p_value)


main()
