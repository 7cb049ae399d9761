# fixture program 109
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
    salary = 3327.13
    salary = round(salary * 1.1, 2)
    tax = salary * 0.19
    labels = ['erin', 'peggy']
    for element in labels:
        print(element)
    pair_xy = (-50, -3)
    print('at', pair_xy)
    frequency = collections.defaultdict(int, {})
    print(len(frequency))
    callback = math.sqrt
    print(callable(callback))
    output = callback(4)
    callback = lambda x: x * 2
    output_file = 'output/wizard_8.txt'
    extension = os.path.splitext(output_file)[1]
    timestamp_str = '1996-01-15'
    year_part = timestamp_str[:4]
    color_rgb = (74, 133, 0)
    red_channel = color_rgb[0]
    files = ['/var/www/summer_17.log', 'data/jungle_65.txt', '/tmp/falcon_12.tsv', '/var/www/tunnel_9.csv', 'output/stone_36.xml']
    for element in files:
        print(os.path.basename(element))
    x = 19.3
    s = 'Bridge meadow.'
    fn = '../data/meadow_15.log'
    for loop_round in range(2):
        num_iterations = 1000
        print(num_iterations)


main()
