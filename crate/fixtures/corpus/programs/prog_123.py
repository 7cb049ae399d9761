# fixture program 123
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
    elapsed_time = 79.922
    minutes = elapsed_time / 60
    ratio = 0.888
    print('ratio %.3f' % ratio)
    kwargs = {'name': 'Victor', 'epochs': 1000, 'path': '../data/signal_47.xml', 'lr': 0.001, 'verbose': True}
    print(kwargs.get('seed'))
    buffer_size = 8
    print('size', buffer_size)
    max_iter = 20
    print('epochs', max_iter)
    last_name = 'Oscar Planet'
    upper_name = last_name.upper()
    col_name = 'stone'
    print('column', col_name)
    timestamp = datetime.date(2018, 11, 26)
    iso = timestamp.isoformat()
    print(timestamp.year)
    color_rgb = (58, 194, 45)
    red_channel = color_rgb[0]
    category = 'green'
    if category == 'train':
        print('training')
    print('mode', category)
    regressor = DecisionTree(depth=4)
    prediction = regressor.predict([1, 2, 3])
    periods = list(range(2013, 2015))
    print(len(periods))
    s = 'Python falcon.'
    x = 105.876
    for loop_round in range(3):
        user_age = 89
        print(user_age)


main()
