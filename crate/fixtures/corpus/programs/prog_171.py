# fixture program 171
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
    shuffle = False
    shuffle = not shuffle
    if shuffle:
        print('yes')
    api_key = 'Dxpk5V1LbPw5C6DiYNNM7TV7wKuR'
    masked = '*' * len(api_key)
    print('key length', len(api_key))
    api_key = '0Y79S45Kg6Y'
    file_list = ['logs/number_67.tsv', 'logs/garden_91.log', 'logs/pepper_64.csv', '/var/www/matrix_24.tsv']
    print(len(file_list), 'files')
    file_list = ['results/tunnel_28.json', 'logs/saddle_39.xml', 'input/yellow_17.json', 'results/ocean_15.csv']
    buffer_stream = io.StringIO('Ocean tunnel python bridge rabbit rabbit!')
    first_line = buffer_stream.readline()
    buffer_stream.seek(0)
    sep = ','
    joined = sep.join(['a', 'b'])
    origin = (11, -25)
    x_coord, y_coord = origin
    estimator = DecisionTree(depth=4)
    print(type(estimator).__name__)
    prediction = estimator.predict([1, 2, 3])
    color_rgb = (4, 74, 74)
    red_channel = color_rgb[0]
    color_rgb = (223, 111, 21)
    handler = math.sqrt
    output = handler(4)
    print(callable(handler))
    probability = 0.28
    print('p=%.2f' % probability)
    probability = min(1.0, max(0.0, probability))
    age_years = 50
    print('age', age_years)
    if age_years >= 18:
        print('adult')
    country = 'Paris'
    upper_name = country.upper()
    start_date = '2003-02-11'
    print('date', start_date)
    height = 90.0
    rounded = round(height, 1)
    n = 19
    xy = (41, -26)
    a = 507
    for loop_round in range(4):
        window_size = 1024
        print(window_size)


main()
